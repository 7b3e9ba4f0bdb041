#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "seplrc/code.hpp"

namespace seplrc {

enum class RepairMethod { Lagrange, OneAddition };
std::string_view to_string(RepairMethod method);

enum class RepairMode {
  Auto,        // one-addition when applicable, else Lagrange
  Lagrange,
  OneAddition,
  CrossCheck,  // run both when applicable; throw RepairMismatch on disagreement
};

struct RepairResult {
  FieldElement value;
  RepairMethod method = RepairMethod::Lagrange;
  std::size_t symbols_read = 0;
};

/// r other positions of the fibre of `position`, smallest in-fibre
/// coordinate first.
std::vector<std::size_t> recovery_set(const LrcCode& code, std::size_t position);

/// The other positions of the fibre of `position`, in column order.
std::vector<std::size_t> fibre_companions(const LrcCode& code, std::size_t position);

RepairResult recover_lagrange(const LrcCode& code, std::span<const std::optional<FieldElement>> word,
                              std::size_t position);

RepairResult recover_one_addition(const LrcCode& code, std::span<const std::optional<FieldElement>> word,
                                  std::size_t position);

bool one_addition_applicable(const LrcCode& code);

RepairResult repair(const LrcCode& code, std::span<const std::optional<FieldElement>> word, std::size_t position,
                    RepairMode mode = RepairMode::Auto);

}  // namespace seplrc

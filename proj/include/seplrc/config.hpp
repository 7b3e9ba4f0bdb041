#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seplrc/code.hpp"

namespace seplrc {

/// One JSON document describing a code. Coefficient arrays are lowest
/// degree first, as canonical field integers.
///
///   {"field": {"p": 13, "m": 1},
///    "curve": {"A": [0, 0, 1], "B": [2, 0, 0, 1]},
///    "orientation": "y", "r": 2,
///    "space": {"complete_m": 8},
///    "fibres": "all",
///    "gonality_overrides": {"2": 4},
///    "assertions": {"semigroup": true}}
struct CodeConfig {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::vector<std::uint64_t> A;
  std::vector<std::uint64_t> B;
  Axis orientation = Axis::YFibre;
  std::optional<int> r;
  std::optional<long long> complete_m;
  std::vector<int> epsilons;
  std::vector<int> ells;
  std::optional<std::vector<std::uint64_t>> fibres;
  std::map<long long, long long> gonality_overrides;
  bool assert_semigroup = false;
};

CodeConfig parse_config(const std::string& json_text);
std::string config_to_json(const CodeConfig& config);

struct BuiltCode {
  LrcCode code;
  GonalityPolicy policy;
};

BuiltCode build(const CodeConfig& config);

/// Codeword files: one line of n canonical integers, "?" for an erasure.
std::vector<std::optional<FieldElement>> parse_word(const Field& field, const std::string& text);
std::string format_word(std::span<const std::optional<FieldElement>> word);
std::string format_word(std::span<const FieldElement> word);

std::string report_json(const ParamReport& report, const std::vector<GhwBound>& ghw = {});
std::string report_table(const ParamReport& report);

}  // namespace seplrc

#include "seplrc/repair.hpp"

#include <algorithm>

#include "seplrc/error.hpp"

namespace seplrc {
namespace {

void check_position(const LrcCode& code, std::span<const std::optional<FieldElement>> word, std::size_t position) {
  if (word.size() != code.n())
    throw Error(ErrorKind::LengthMismatch,
                "word length " + std::to_string(word.size()) + " != n=" + std::to_string(code.n()));
  if (position >= code.n())
    throw Error(ErrorKind::InvalidArgument, "position " + std::to_string(position) + " out of range");
}

FieldElement read(std::span<const std::optional<FieldElement>> word, std::size_t pos) {
  if (!word[pos]) throw Error(ErrorKind::MissingSymbol, "position " + std::to_string(pos) + " is erased");
  return *word[pos];
}

}  // namespace

std::string_view to_string(RepairMethod method) {
  return method == RepairMethod::Lagrange ? "lagrange" : "one-addition";
}

std::vector<std::size_t> fibre_companions(const LrcCode& code, std::size_t position) {
  const std::size_t fibre = code.recovery_map.at(position).first;
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < code.n(); ++p)
    if (p != position && code.recovery_map[p].first == fibre) out.push_back(p);
  return out;
}

std::vector<std::size_t> recovery_set(const LrcCode& code, std::size_t position) {
  auto others = fibre_companions(code, position);
  std::stable_sort(others.begin(), others.end(),
                   [&](std::size_t i, std::size_t j) { return code.coordinate(i) < code.coordinate(j); });
  others.resize(std::min<std::size_t>(others.size(), static_cast<std::size_t>(code.r())));
  return others;
}

RepairResult recover_lagrange(const LrcCode& code, std::span<const std::optional<FieldElement>> word,
                              std::size_t position) {
  check_position(code, word, position);
  const Field& F = code.field();
  const auto set = recovery_set(code, position);
  std::vector<FieldElement> xs;
  std::vector<FieldElement> ys;
  for (auto p : set) {
    xs.push_back(code.coordinate(p));
    ys.push_back(read(word, p));
  }
  const FieldElement target = code.coordinate(position);
  FieldElement value = F.zero();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    FieldElement num = F.one();
    FieldElement den = F.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j])
        throw Error(ErrorKind::DuplicateAbscissa, "abscissa " + std::to_string(xs[i].value) + " repeats");
      num = F.mul(num, F.sub(target, xs[j]));
      den = F.mul(den, F.sub(xs[i], xs[j]));
    }
    value = F.add(value, F.mul(ys[i], F.div(num, den)));
  }
  return {value, RepairMethod::Lagrange, set.size()};
}

bool one_addition_applicable(const LrcCode& code) {
  return code.curve.one_addition_applicable(code.space.orientation, code.space.has_constant_layer()).applicable;
}

RepairResult recover_one_addition(const LrcCode& code, std::span<const std::optional<FieldElement>> word,
                                  std::size_t position) {
  check_position(code, word, position);
  const Applicability app =
      code.curve.one_addition_applicable(code.space.orientation, code.space.has_constant_layer());
  if (!app.applicable) throw Error(ErrorKind::NotApplicable, app.reason);
  const Field& F = code.field();
  FieldElement sum = F.zero();
  const auto others = fibre_companions(code, position);
  for (auto p : others) sum = F.add(sum, read(word, p));
  return {F.neg(sum), RepairMethod::OneAddition, others.size()};
}

RepairResult repair(const LrcCode& code, std::span<const std::optional<FieldElement>> word, std::size_t position,
                    RepairMode mode) {
  switch (mode) {
    case RepairMode::Lagrange: return recover_lagrange(code, word, position);
    case RepairMode::OneAddition: return recover_one_addition(code, word, position);
    case RepairMode::Auto:
      return one_addition_applicable(code) ? recover_one_addition(code, word, position)
                                           : recover_lagrange(code, word, position);
    case RepairMode::CrossCheck: {
      const RepairResult lag = recover_lagrange(code, word, position);
      if (!one_addition_applicable(code)) return lag;
      const RepairResult fast = recover_one_addition(code, word, position);
      if (fast.value != lag.value)
        throw Error(ErrorKind::RepairMismatch, "position " + std::to_string(position) + ": one-addition gives " +
                                                   std::to_string(fast.value.value) + ", lagrange gives " +
                                                   std::to_string(lag.value.value));
      return fast;
    }
  }
  return recover_lagrange(code, word, position);
}

}  // namespace seplrc

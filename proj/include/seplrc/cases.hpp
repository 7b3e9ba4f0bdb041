#pragma once

#include <functional>
#include <string>
#include <vector>

#include "seplrc/config.hpp"

namespace seplrc {

/// Configurations of the reference curves, with V left for the caller.
namespace presets {
CodeConfig cubic13();      // Y = X^3 over GF(13)
CodeConfig elliptic13();   // Y^2 = X^3 + 2 over GF(13), semigroup asserted
CodeConfig hermitian16();  // Y^5 = X^4 + X over GF(16)
CodeConfig kondo64();      // Y^2 + Y = X^9 over GF(64)
CodeConfig quotient64();   // Y^3 = X^8 + X over GF(64)

SepCurve curve(const CodeConfig& config);
CodeConfig with_ells(CodeConfig config, std::vector<int> ells);
CodeConfig with_complete(CodeConfig config, long long m);
}  // namespace presets

struct CaseCheck {
  enum class Status { Pass, Fail, ExpectedDivergence };
  std::string label;
  std::string expected;
  std::string actual;
  Status status = Status::Pass;
};

std::string_view to_string(CaseCheck::Status status);

struct CaseResult {
  std::string name;
  std::vector<CaseCheck> checks;
  bool passed() const;
};

struct ExampleCase {
  std::string name;
  std::string summary;
  std::function<CaseResult()> run;
};

/// The reference reproduction suite: published parameters of the curves above.
const std::vector<ExampleCase>& example_cases();

}  // namespace seplrc

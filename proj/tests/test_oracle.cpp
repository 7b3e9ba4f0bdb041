#include <doctest.h>

#include <random>

#include "seplrc/cases.hpp"
#include "seplrc/error.hpp"
#include "seplrc/oracle.hpp"

using namespace seplrc;

namespace {

LrcCode code_of(CodeConfig cfg) { return build(cfg).code; }

CodeConfig cubic(int ell) {
  auto cfg = presets::cubic13();
  cfg.r = 2;
  cfg.fibres = std::vector<std::uint64_t>{1, 8, 12};
  return presets::with_ells(cfg, {ell, ell});
}

// n - d_t = max{|R| : rank(G_R) <= k - t}, over every subset R.
std::vector<long long> naive_hierarchy(const LrcCode& code) {
  const std::size_t n = code.n(), k = code.k;
  std::vector<long long> best(k + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1u) cols.push_back(j);
    const std::size_t rk = cols.empty() ? 0 : rank(code.field(), code.code_basis.select_columns(cols));
    best[rk] = std::max<long long>(best[rk], static_cast<long long>(cols.size()));
  }
  for (std::size_t s = 1; s <= k; ++s) best[s] = std::max(best[s], best[s - 1]);
  std::vector<long long> d;
  for (std::size_t t = 1; t <= k; ++t) d.push_back(static_cast<long long>(n) - best[k - t]);
  return d;
}

long long defect(const LrcCode& code, long long d) {
  const long long n = static_cast<long long>(code.n()), k = static_cast<long long>(code.k);
  return n + 2 - k - d - ceil_div(k, code.r());
}

void check_inside_bounds(const LrcCode& code, const GonalityPolicy& policy = {}) {
  const long long k = static_cast<long long>(code.k);
  const auto exact = brute_weight_hierarchy(code, k);
  const auto bounds = ghw_bounds(code, k, policy);
  for (long long t = 0; t < k; ++t) {
    CAPTURE(t + 1);
    CHECK(bounds[t].lower <= exact[t]);
    CHECK(exact[t] <= bounds[t].upper);
    if (t) CHECK(exact[t - 1] < exact[t]);
  }
  CHECK(defect(code, exact[0]) >= 0);
  CHECK(defect(code, exact[0]) <= params(code, policy).defect_upper);
}

}  // namespace

TEST_CASE("work estimates") {
  CHECK(enumeration_work(13, 2) == 14);
  CHECK(enumeration_work(2, 3) == 7);
  CHECK(hierarchy_work(4, 3) == 1 + 4 + 6);
  CHECK(hierarchy_work(18, 18) == (std::uint64_t{1} << 18) - 1);
  CHECK(hierarchy_work(126, 43) == UINT64_MAX);
}

TEST_CASE("length-9 codes are optimal") {
  const std::vector<std::pair<int, long long>> rows{{0, 8}, {1, 5}, {2, 2}};
  for (const auto& [ell, d] : rows) {
    const LrcCode code = code_of(cubic(ell));
    CHECK(brute_min_distance(code) == d);
    CHECK(defect(code, d) == 0);
  }
  const Enumeration e = min_distance_by_enumeration(code_of(cubic(0)));
  CHECK(e.distance == 8);
  CHECK(e.visited == 14);
}

TEST_CASE("complete elliptic codes are optimal") {
  const std::vector<std::tuple<long long, std::size_t, long long>> rows{
      {3, 3, 15}, {6, 5, 12}, {9, 7, 9}, {12, 9, 6}, {15, 11, 3}};
  for (const auto& [m, k, d] : rows) {
    const LrcCode code = code_of(presets::with_complete(presets::elliptic13(), m));
    CHECK(code.k == k);
    CHECK(brute_min_distance(code) == d);
    CHECK(defect(code, d) == 0);
  }
}

TEST_CASE("elliptic V_8 hierarchy") {
  const LrcCode code = code_of(presets::with_complete(presets::elliptic13(), 8));
  const auto h = brute_weight_hierarchy(code, 6);
  CHECK(h == std::vector<long long>{10, 12, 14, 15, 17, 18});
  CHECK(h == naive_hierarchy(code));
  CHECK(brute_weight_hierarchy(code, 6, WorkCaps{}.subsets, 1) == h);
  CHECK(brute_weight_hierarchy(code, 6, WorkCaps{}.subsets, 5) == h);
  CHECK(brute_weight_hierarchy(code, 2) == std::vector<long long>{10, 12});
  CHECK(min_distance_by_enumeration(code).distance == 10);
}

TEST_CASE("subset scan matches the naive definition") {
  for (int ell : {0, 1, 2}) {
    const LrcCode code = code_of(cubic(ell));
    CHECK(brute_weight_hierarchy(code, static_cast<long long>(code.k)) == naive_hierarchy(code));
  }
  for (long long m : {3, 5, 7, 10}) {
    const LrcCode code = code_of(presets::with_complete(presets::elliptic13(), m));
    CHECK(brute_weight_hierarchy(code, static_cast<long long>(code.k)) == naive_hierarchy(code));
  }
}

TEST_CASE("work caps") {
  const LrcCode kondo = code_of(presets::with_complete(presets::kondo64(), 50));
  try {
    brute_min_distance(kondo);
    FAIL("expected WorkCapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WorkCapExceeded);
  }
  const LrcCode small = code_of(cubic(1));
  CHECK_THROWS_AS(brute_weight_hierarchy(small, 1, 10), Error);
  CHECK_THROWS_AS(min_distance_by_enumeration(small, 10), Error);
  CHECK(brute_min_distance(small, WorkCaps{1, 1 << 20}) == 5);
  CHECK(brute_min_distance(small, WorkCaps{1 << 20, 1}) == 5);
}

TEST_CASE("brute hierarchies lie inside the bound brackets") {
  for (int ell : {0, 1, 2}) check_inside_bounds(code_of(cubic(ell)));
  for (long long m = 0; m <= 17; ++m) check_inside_bounds(code_of(presets::with_complete(presets::elliptic13(), m)));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    auto cfg = presets::elliptic13();
    cfg.r = 1 + static_cast<int>(rng() % 2);
    std::vector<int> ells(static_cast<std::size_t>(*cfg.r));
    for (auto& l : ells) l = static_cast<int>(rng() % 6);
    check_inside_bounds(code_of(presets::with_ells(cfg, ells)));
  }

  // four Hermitian fibres: n = 16, m can exceed n
  for (auto ells : {std::vector<int>{2, 1, 1}, {3, 2, 1}, {1, 1, 0}, {4, 3, 2}}) {
    auto cfg = presets::with_ells(presets::hermitian16(), ells);
    const SepCurve C = presets::curve(cfg);
    std::vector<std::uint64_t> bases;
    for (const auto& f : C.fibres(Axis::YFibre))
      if (f.totally_split && bases.size() < 4) bases.push_back(f.base.value);
    cfg.fibres = bases;
    const BuiltCode b = build(cfg);
    CAPTURE(b.code.m());
    check_inside_bounds(b.code, b.policy);
  }
}

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "seplrc/cases.hpp"
#include "seplrc/error.hpp"
#include "seplrc/oracle.hpp"

using namespace seplrc;

namespace {

LrcCode code_of(CodeConfig cfg) { return build(cfg).code; }

LrcCode elliptic_v8() { return code_of(presets::with_complete(presets::elliptic13(), 8)); }

long long weight(const std::vector<FieldElement>& w) {
  return std::count_if(w.begin(), w.end(), [](FieldElement v) { return v.value != 0; });
}

std::vector<FieldElement> random_vec(const Field& F, std::size_t len, std::mt19937_64& rng) {
  std::vector<FieldElement> v(len);
  for (auto& x : v) x = FieldElement{static_cast<std::uint32_t>(rng() % F.order())};
  return v;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Config;
}

}  // namespace

TEST_CASE("reference dimensions") {
  const LrcCode h62 = code_of(presets::with_ells(presets::hermitian16(), {13, 13, 13}));
  CHECK(h62.n() == 64);
  CHECK(h62.k == 42);
  CHECK(h62.kernel.rows() == 0);
  const LrcCode h66 = code_of(presets::with_ells(presets::hermitian16(), {16, 15, 14}));
  CHECK(h66.dim_v() == 48);
  CHECK(h66.k == 47);
  REQUIRE(h66.kernel.rows() == 1);
  // the kernel function vanishes on every point
  const auto zero = encode(h66, h66.kernel.row(0));
  CHECK(weight(zero) == 0);
  const LrcCode e8 = elliptic_v8();
  CHECK(e8.n() == 18);
  CHECK(e8.k == 6);
  CHECK(e8.r() == 2);
}

TEST_CASE("column layout") {
  const LrcCode code = code_of(presets::with_complete(presets::kondo64(), 50));
  const int v1 = code.curve.fibre_pole_order(Axis::YFibre);
  CHECK(code.n() == code.fibres.size() * static_cast<std::size_t>(v1));
  for (std::size_t p = 0; p < code.n(); ++p) {
    const auto [f, slot] = code.recovery_map[p];
    CHECK(f == p / v1);
    CHECK(slot == p % v1);
    CHECK(code.points[p] == code.fibres[f].points[slot]);
  }
  for (std::size_t f = 1; f < code.fibres.size(); ++f) CHECK(code.fibres[f - 1].base < code.fibres[f].base);
}

TEST_CASE("fibre selection errors") {
  auto cfg = presets::cubic13();
  cfg.r = 2;
  cfg = presets::with_ells(cfg, {1, 1});
  cfg.fibres = std::vector<std::uint64_t>{1, 0};
  CHECK(kind_of([&] { build(cfg); }) == ErrorKind::FibreNotSplit);
  cfg.fibres = std::vector<std::uint64_t>{};
  CHECK(kind_of([&] { build(cfg); }) == ErrorKind::NoSplitFibres);
  // x -> x^3 permutes GF(5): every fibre is a single point
  CodeConfig perm;
  perm.p = 5;
  perm.A = {0, 1};
  perm.B = {0, 0, 0, 1};
  perm = presets::with_ells(perm, {0, 0});
  CHECK(kind_of([&] { build(perm); }) == ErrorKind::NoSplitFibres);
}

TEST_CASE("encode") {
  const LrcCode code = elliptic_v8();
  const Field& F = code.field();
  std::vector<FieldElement> msg(code.dim_v(), F.zero());
  CHECK(weight(encode(code, msg)) == 0);
  msg[0] = F.one();
  CHECK(encode(code, msg) == std::vector<FieldElement>(code.n(), F.one()));
  CHECK(kind_of([&] { encode(code, std::vector<FieldElement>(3)); }) == ErrorKind::LengthMismatch);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_vec(F, code.dim_v(), rng), b = random_vec(F, code.dim_v(), rng);
    std::vector<FieldElement> sum(code.dim_v());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = F.add(a[i], b[i]);
    const auto ca = encode(code, a), cb = encode(code, b), cs = encode(code, sum);
    for (std::size_t j = 0; j < code.n(); ++j) CHECK(cs[j] == F.add(ca[j], cb[j]));
  }

  auto cfg = presets::cubic13();
  cfg.r = 2;
  cfg.fibres = std::vector<std::uint64_t>{1, 8, 12};
  cfg = presets::with_ells(cfg, {0, 0});
  const LrcCode lin = code_of(cfg);
  REQUIRE(lin.basis == std::vector<Monomial>{{0, 0}, {1, 0}});
  const std::vector<FieldElement> f{FieldElement{1}, FieldElement{2}};
  const auto word = encode(lin, f);
  CHECK(std::vector<FieldElement>(word.begin(), word.begin() + 3) ==
        std::vector<FieldElement>{FieldElement{3}, FieldElement{7}, FieldElement{6}});
}

TEST_CASE("generator export") {
  const LrcCode code = elliptic_v8();
  const std::string text = export_generator(code);
  CHECK(text.rfind("# q=13 n=18 rows=6 k=6\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  CHECK(text.find("\n1 1 1 1") != std::string::npos);  // row of the constant function
}

TEST_CASE("dimension equals dim V below n, abundance bounded by iota(m - n)") {
  std::mt19937_64 rng(11);
  for (auto base : {presets::elliptic13(), presets::hermitian16(), presets::kondo64()}) {
    const SepCurve C = presets::curve(base);
    const int r = C.fibre_pole_order(Axis::YFibre) - 1;
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<int> ells(r);
      for (auto& l : ells) l = static_cast<int>(rng() % 20);
      const LrcCode code = code_of(presets::with_ells(base, ells));
      const long long n = static_cast<long long>(code.n());
      const long long m = code.m();
      CAPTURE(m);
      CHECK(code.k <= code.dim_v());
      CHECK(code.kernel.rows() == code.dim_v() - code.k);
      if (m < n) CHECK(code.k == code.dim_v());
      if (m >= n) CHECK(static_cast<long long>(code.dim_v() - code.k) <= C.semigroup().iota(m - n));
    }
  }
}

TEST_CASE("constant-layer witness has weight n - l0 v1") {
  for (auto cfg : {presets::with_complete(presets::kondo64(), 50), presets::with_complete(presets::elliptic13(), 8)}) {
    const LrcCode code = code_of(cfg);
    const Field& F = code.field();
    const long long ell0 = code.space.ells[0];
    // tau = prod (y - beta) over the first l0 fibre bases, as layer-0 coefficients
    std::vector<FieldElement> poly{F.one()};
    for (long long i = 0; i < ell0; ++i) {
      const FieldElement beta = code.fibres[i].base;
      std::vector<FieldElement> next(poly.size() + 1, F.zero());
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] = F.add(next[j + 1], poly[j]);
        next[j] = F.sub(next[j], F.mul(beta, poly[j]));
      }
      poly = next;
    }
    std::vector<FieldElement> msg(code.dim_v(), F.zero());
    for (std::size_t t = 0; t < code.basis.size(); ++t)
      if (code.basis[t].layer == 0) msg[t] = poly[code.basis[t].power];
    const ParamReport rep = params(code);
    REQUIRE(rep.d_upper);
    CHECK(weight(encode(code, msg)) == *rep.d_upper);
    CHECK(*rep.d_upper == static_cast<long long>(code.n()) - ell0 * code.curve.fibre_pole_order(Axis::YFibre));
  }
}

TEST_CASE("parameter reports") {
  const BuiltCode kondo = build(presets::with_complete(presets::kondo64(), 50));
  const ParamReport k = params(kondo.code, kondo.policy);
  CHECK(k.n == 126);
  CHECK(k.k == 43);
  CHECK(k.r == 8);
  CHECK(k.d_lower == 76);
  CHECK(k.d_lower_rule == "goppa");
  CHECK(k.d_lower_certified);
  CHECK(k.defect_upper == 3);
  CHECK(k.riemann_gap == 4);
  REQUIRE(k.defect_closed_form);
  CHECK(k.defect_closed_form->bound == 3);
  CHECK(k.d_upper == 126 - 45);

  auto hcfg = presets::with_ells(presets::hermitian16(), {16, 15, 14});
  hcfg.gonality_overrides[2] = 4;
  const BuiltCode herm = build(hcfg);
  const ParamReport h = params(herm.code, herm.policy);
  CHECK(h.w == 1);
  CHECK(h.kernel_dim == 1);
  CHECK(h.abundant);
  CHECK(h.gamma.rung == GonalityRung::Override);
  CHECK(h.d_lower == 2);
  CHECK(h.defect_upper == 1);
  CHECK(h.constant_layer_abundant);
  CHECK_FALSE(h.d_upper);

  const BuiltCode quot = build(presets::with_complete(presets::quotient64(), 50));
  const ParamReport qr = params(quot.code, quot.policy);
  CHECK(qr.k == 40);
  CHECK(qr.d_lower == 126);
  CHECK(qr.defect_upper == 6);
  REQUIRE(qr.defect_closed_form);
  CHECK(qr.defect_closed_form->bound == 6);
}

TEST_CASE("gonality ladder") {
  const SepCurve herm = presets::curve(presets::hermitian16());
  CHECK(resolve_gonality(herm, 1, {}).rung == GonalityRung::Trivial);
  const Gonality floor = resolve_gonality(herm, 3, {});
  CHECK(floor.rung == GonalityRung::Floor);
  CHECK(floor.value == 2);
  GonalityPolicy strict{{}, true};
  CHECK(kind_of([&] { resolve_gonality(herm, 2, strict); }) == ErrorKind::UncertifiedGonality);
  strict.overrides[2] = 4;
  CHECK(resolve_gonality(herm, 2, strict).value == 4);
  const SepCurve kondo = presets::curve(presets::kondo64());
  const Gonality cl = resolve_gonality(kondo, 5, strict);
  CHECK(cl.rung == GonalityRung::Clifford);
  CHECK(cl.value == 8);

  // without the override the report falls back to n - m + w
  const LrcCode h66 = code_of(presets::with_ells(presets::hermitian16(), {16, 15, 14}));
  const ParamReport weak = params(h66);
  CHECK(weak.gamma.rung == GonalityRung::Floor);
  CHECK(weak.d_lower == 1);
  CHECK(weak.d_lower_rule == "trivial");
  CHECK(kind_of([&] { params(h66, GonalityPolicy{{}, true}); }) == ErrorKind::UncertifiedGonality);
}

TEST_CASE("closed-form optimal defect bounds the Goppa-based defect") {
  for (auto base : {presets::elliptic13(), presets::kondo64(), presets::quotient64(), presets::hermitian16()}) {
    for (long long m = 1; m < 120; ++m) {
      const LrcCode code = code_of(presets::with_complete(base, m));
      if (m >= static_cast<long long>(code.n())) break;
      const ParamReport rep = params(code);
      REQUIRE(rep.defect_closed_form);
      CAPTURE(m);
      CHECK(rep.defect_closed_form->bound >= rep.defect_upper);
      // k = m + 1 - g from 2g on, where the two agree
      if (rep.m >= 2 * rep.genus) CHECK(rep.defect_closed_form->bound == rep.defect_upper);
      CHECK(rep.defect_upper >= 0);
      if (rep.d_upper) CHECK(rep.d_lower <= *rep.d_upper);
    }
  }
}

TEST_CASE("GHW bounds") {
  const LrcCode e8 = elliptic_v8();
  const auto rows = ghw_bounds(e8, 6);
  std::vector<long long> lower, locality, upper;
  for (const auto& g : rows) {
    lower.push_back(g.lower);
    locality.push_back(*g.locality_upper);
    upper.push_back(g.upper);
  }
  CHECK(lower == std::vector<long long>{10, 12, 13, 14, 15, 16});
  CHECK(locality == std::vector<long long>{11, 12, 14, 15, 17, 18});
  CHECK(rows[1].fibre_upper == 12);
  CHECK(rows[1].fibre_count == 2);
  CHECK(upper == std::vector<long long>{11, 12, 14, 15, 17, 18});
  CHECK(kind_of([&] { ghw_bounds(e8, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { ghw_bounds(e8, 7); }) == ErrorKind::InvalidArgument);

  const BuiltCode kondo = build(presets::with_complete(presets::kondo64(), 50));
  const auto kb = ghw_bounds(kondo.code, 5, kondo.policy);
  const std::vector<std::pair<long long, long long>> want{{76, 79}, {78, 80}, {80, 81}, {82, 83}, {84, 84}};
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(kb[i].lower == want[i].first);
    CHECK(kb[i].upper == want[i].second);
  }
  CHECK(locality_singleton_bound(18, 6, 2, 1) == 11);
}

TEST_CASE("rank indices") {
  auto exact = [](std::vector<long long> d) {
    std::vector<std::pair<long long, long long>> b;
    for (auto x : d) b.emplace_back(x, x);
    return b;
  };
  const auto pub = rank_indices(18, 6, 2, exact({10, 12, 13, 14, 15, 18}));
  CHECK(pub.optimal.earliest_certain == 2);
  CHECK(pub.optimal.exact());
  CHECK(pub.mds.earliest_certain == 6);
  CHECK(pub.mds_floor == 5);
  std::vector<std::optional<bool>> eq{false, true, false, false, false, true};
  CHECK(pub.locality_equality == eq);

  const auto brute = rank_indices(18, 6, 2, exact({10, 12, 14, 15, 17, 18}));
  CHECK(brute.mds.earliest_certain == 5);
  CHECK(brute.top_weight_check == true);

  const auto mds = rank_indices(9, 2, 2, exact({8, 9}));
  CHECK(mds.mds.earliest_certain == 1);

  const auto window = rank_indices(126, 43, 8,
                                   std::vector<std::pair<long long, long long>>{{76, 79}, {78, 80}, {80, 81}});
  CHECK_FALSE(window.mds.earliest_possible);
  CHECK_FALSE(window.locality_equality[0].has_value());
}

TEST_CASE("erasure decoding") {
  const LrcCode code = elliptic_v8();
  const Field& F = code.field();
  std::mt19937_64 rng(5);
  const auto msg = random_vec(F, code.dim_v(), rng);
  const auto word = encode(code, msg);
  std::vector<std::optional<FieldElement>> full(word.begin(), word.end());
  CHECK(erasure_decode(code, full) == word);

  const long long d = brute_min_distance(code);
  REQUIRE(d == 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> order(code.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto erased = full;
    for (long long i = 0; i < d - 1; ++i) erased[order[i]].reset();
    REQUIRE(erasure_decode(code, erased) == word);
  }

  const Enumeration low = min_distance_by_enumeration(code);
  auto blind = full;
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < code.n(); ++j)
    if (low.witness[j].value != 0) {
      blind[j].reset();
      support.push_back(j);
    }
  CHECK(kind_of([&] { erasure_decode(code, blind); }) == ErrorKind::Ambiguous);
  const auto inside = codeword_inside(code, support);
  REQUIRE(inside);
  for (std::size_t j = 0; j < code.n(); ++j)
    if (std::find(support.begin(), support.end(), j) == support.end()) CHECK(inside->at(j).value == 0);
  CHECK(weight(*inside) > 0);
  const std::vector<std::size_t> few{0, 1};
  CHECK_FALSE(codeword_inside(code, few));

  auto corrupt = full;
  corrupt[0].reset();
  corrupt[5] = F.add(*corrupt[5], F.one());
  CHECK(kind_of([&] { erasure_decode(code, corrupt); }) == ErrorKind::Inconsistent);
}

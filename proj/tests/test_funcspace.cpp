#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "seplrc/cases.hpp"
#include "seplrc/error.hpp"
#include "seplrc/funcspace.hpp"

using namespace seplrc;

namespace {

VSpec full(const SepCurve& C, Axis axis, std::vector<int> ells) {
  std::vector<int> eps(ells.size(), 1);
  return VSpec::make(C, axis, std::nullopt, std::move(eps), std::move(ells));
}

std::vector<std::pair<SepCurve, Axis>> certified_orientations() {
  std::vector<std::pair<SepCurve, Axis>> out;
  for (auto cfg : {presets::elliptic13(), presets::hermitian16(), presets::kondo64(), presets::quotient64()}) {
    const SepCurve C = presets::curve(cfg);
    out.emplace_back(C, Axis::YFibre);
    out.emplace_back(C, Axis::XFibre);
  }
  return out;
}

}  // namespace

TEST_CASE("m(V) and dim V") {
  const SepCurve herm = presets::curve(presets::hermitian16());
  const VSpec v66 = full(herm, Axis::YFibre, {16, 15, 14});
  CHECK(m_of_V(v66, herm) == 66);
  CHECK(dim_V(v66) == 48);
  const SepCurve ell = presets::curve(presets::elliptic13());
  const VSpec v8 = full(ell, Axis::YFibre, {2, 2});
  CHECK(m_of_V(v8, ell) == 8);
  CHECK(dim_V(v8) == 6);
  const VSpec constants = VSpec::make(ell, Axis::YFibre, 1, {1}, {0});
  CHECK(m_of_V(constants, ell) == 0);
  CHECK(dim_V(constants) == 1);
  const SepCurve kondo = presets::curve(presets::kondo64());
  CHECK(dim_V(full(kondo, Axis::YFibre, {5, 5, 5, 4, 4, 4, 4, 4})) == 43);
}

TEST_CASE("basis order and inactive layers") {
  const SepCurve ell = presets::curve(presets::elliptic13());
  const VSpec v = VSpec::make(ell, Axis::YFibre, 2, {0, 1}, {7, 1});
  CHECK(v.ells == std::vector<int>{0, 1});
  CHECK_FALSE(v.has_constant_layer());
  CHECK(v.basis() == std::vector<Monomial>{{1, 0}, {1, 1}});
  CHECK(full(ell, Axis::YFibre, {1, 0}).basis() == std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(xy_exponents(Axis::YFibre, Monomial{1, 2}) == std::pair{1, 2});
  CHECK(xy_exponents(Axis::XFibre, Monomial{1, 2}) == std::pair{2, 1});
}

TEST_CASE("completion") {
  const SepCurve kondo = presets::curve(presets::kondo64());
  CHECK(completion(50, kondo, Axis::YFibre).ells == std::vector<int>{5, 5, 5, 4, 4, 4, 4, 4});
  const SepCurve quotient = presets::curve(presets::quotient64());
  CHECK(completion(50, quotient, Axis::YFibre).ells == std::vector<int>{6, 5, 5, 5, 4, 4, 4});
  CHECK(completion(50, quotient, Axis::XFibre).ells == std::vector<int>{16, 14});
  CHECK(completion(48, quotient, Axis::XFibre).ells == std::vector<int>{16, 13});
  const SepCurve herm = presets::curve(presets::hermitian16());
  CHECK(completion(62, herm, Axis::YFibre).ells == std::vector<int>{15, 14, 13});
  // small m leaves the high layers inactive
  const VSpec v3 = completion(3, kondo, Axis::YFibre);
  CHECK(v3.epsilons == std::vector<int>{1, 1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("completeness") {
  const SepCurve ell = presets::curve(presets::elliptic13());
  CHECK(is_complete(full(ell, Axis::YFibre, {2, 2}), ell));
  const SepCurve herm = presets::curve(presets::hermitian16());
  CHECK_FALSE(is_complete(full(herm, Axis::YFibre, {13, 13, 13}), herm));
  CHECK(is_complete(VSpec::make(ell, Axis::YFibre, 1, {1}, {0}), ell));
}

TEST_CASE("riemann gap") {
  const SepCurve ell = presets::curve(presets::elliptic13());
  const VSpec v8 = full(ell, Axis::YFibre, {2, 2});
  CHECK(riemann_gap(v8, ell) == 2);
  CHECK(riemann_gap_closed_form(v8, ell) == 2);
  CHECK_FALSE(equals_riemann_space(v8, ell));
  CHECK(equals_riemann_space(completion(3, ell, Axis::YFibre), ell));
  const SepCurve kondo = presets::curve(presets::kondo64());
  CHECK(riemann_gap(completion(50, kondo, Axis::YFibre), kondo) == 4);

  auto bare_cfg = presets::elliptic13();
  bare_cfg.assert_semigroup = false;
  const SepCurve bare = presets::curve(bare_cfg);
  try {
    (void)riemann_gap(full(bare, Axis::YFibre, {2, 2}), bare);
    FAIL("expected UncertifiedSemigroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UncertifiedSemigroup);
  }
}

TEST_CASE("invalid spaces") {
  const SepCurve ell = presets::curve(presets::elliptic13());
  auto kind = [&](std::optional<int> r, std::vector<int> e, std::vector<int> l) {
    try {
      VSpec::make(ell, Axis::YFibre, r, e, l);
    } catch (const Error& err) {
      return err.kind();
    }
    return ErrorKind::Config;
  };
  CHECK(kind(3, {1, 1, 1}, {0, 0, 0}) == ErrorKind::InvalidSpace);
  CHECK(kind(0, {}, {}) == ErrorKind::InvalidSpace);
  CHECK(kind(std::nullopt, {1}, {0}) == ErrorKind::InvalidSpace);
  CHECK(kind(2, {0, 0}, {1, 1}) == ErrorKind::InvalidSpace);
  CHECK(kind(2, {2, 1}, {1, 1}) == ErrorKind::InvalidSpace);
  CHECK(kind(2, {1, 1}, {-1, 1}) == ErrorKind::InvalidSpace);
}

TEST_CASE("properties: pole orders, completion containment, Riemann spaces") {
  std::mt19937_64 rng(7);
  for (const auto& [C, axis] : certified_orientations()) {
    const int v1 = C.fibre_pole_order(axis);
    const int v2 = C.coordinate_pole_order(axis);
    const int r = v1 - 1;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> eps(r), ells(r);
      for (int i = 0; i < r; ++i) {
        eps[i] = static_cast<int>(rng() % 2);
        ells[i] = static_cast<int>(rng() % 12);
      }
      eps[rng() % r] = 1;
      const VSpec V = VSpec::make(C, axis, r, eps, ells);
      const long long m = m_of_V(V, C);
      std::set<long long> orders;
      for (const auto& mono : V.basis()) {
        const auto [i, j] = xy_exponents(axis, mono);
        const long long order = C.valuation(i, j);
        CHECK(order <= m);  // every monomial lies in L(mQ)
        orders.insert(order);
      }
      CHECK(static_cast<long long>(orders.size()) == dim_V(V));
      const auto complete_basis = completion(m, C, axis).basis();
      for (const auto& mono : V.basis())
        CHECK(std::find(complete_basis.begin(), complete_basis.end(), mono) != complete_basis.end());
    }
    for (long long m = 0; m <= 80; ++m) {
      const VSpec Vm = completion(m, C, axis);
      bool representable = false;
      for (int i = 0; i < r && i * v2 <= m; ++i) representable = representable || (m - i * v2) % v1 == 0;
      CHECK(m_of_V(Vm, C) <= m);
      CHECK((m_of_V(Vm, C) == m) == representable);
      CHECK(riemann_gap(Vm, C) == riemann_gap_closed_form(Vm, C));
      if (equals_riemann_space(Vm, C)) {
        std::set<long long> orders;
        for (const auto& mono : Vm.basis()) {
          const auto [i, j] = xy_exponents(axis, mono);
          orders.insert(C.valuation(i, j));
        }
        std::set<long long> members;
        for (long long h = 0; h <= m_of_V(Vm, C); ++h)
          if (C.semigroup().contains(h)) members.insert(h);
        CHECK(orders == members);
      }
    }
  }
}

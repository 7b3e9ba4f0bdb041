#pragma once

#include <optional>
#include <vector>

#include "seplrc/curve.hpp"

namespace seplrc {

/// coord^layer * fibre^power, where `coord` is the in-fibre coordinate and
/// `fibre` the fibre function of the orientation.
struct Monomial {
  int layer = 0;
  int power = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exponents (i, j) of x^i y^j for a monomial under an orientation.
std::pair<int, int> xy_exponents(Axis axis, Monomial mono);

/// The evaluation space: sum over active layers i < r of <1, f, ..., f^{l_i}> c^i
/// with f the fibre function and c the in-fibre coordinate.
struct VSpec {
  Axis orientation = Axis::YFibre;
  int r = 1;
  std::vector<int> epsilons;  // 0/1, length r
  std::vector<int> ells;      // length r, zeroed where inactive

  /// Validates r, the layer flags and pole-order distinctness. `r`
  /// defaults to (fibre pole order - 1).
  static VSpec make(const SepCurve& curve, Axis orientation, std::optional<int> r, std::vector<int> epsilons,
                    std::vector<int> ells);

  bool has_constant_layer() const { return !epsilons.empty() && epsilons[0] != 0; }
  /// Basis monomials, layer ascending then power ascending.
  std::vector<Monomial> basis() const;

  friend bool operator==(const VSpec&, const VSpec&) = default;
};

long long m_of_V(const VSpec& space, const SepCurve& curve);
long long dim_V(const VSpec& space);

/// The complete space V_m (largest space of the above shape inside L(mQ)).
VSpec completion(long long m, const SepCurve& curve, Axis orientation, std::optional<int> r = std::nullopt);
bool is_complete(const VSpec& space, const SepCurve& curve);

/// dim L(mQ) - dim V with m = m(V). Requires a certified (or asserted)
/// Weierstrass semigroup.
long long riemann_gap(const VSpec& space, const SepCurve& curve);
bool equals_riemann_space(const VSpec& space, const SepCurve& curve);

/// Closed form of the gap for a complete space with maximal r:
/// 0 when m < v(c)(v(f)-1), else 1 + floor((m - v(c)(v(f)-1)) / v(f)).
/// nullopt when the space is not complete or r is not maximal.
std::optional<long long> riemann_gap_closed_form(const VSpec& space, const SepCurve& curve);

}  // namespace seplrc

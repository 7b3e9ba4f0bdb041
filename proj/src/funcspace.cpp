#include "seplrc/funcspace.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "seplrc/error.hpp"

namespace seplrc {

std::pair<int, int> xy_exponents(Axis axis, Monomial mono) {
  return axis == Axis::YFibre ? std::pair{mono.layer, mono.power} : std::pair{mono.power, mono.layer};
}

VSpec VSpec::make(const SepCurve& curve, Axis orientation, std::optional<int> r, std::vector<int> epsilons,
                  std::vector<int> ells) {
  const int v1 = curve.fibre_pole_order(orientation);
  const int v2 = curve.coordinate_pole_order(orientation);
  const int rr = r.value_or(v1 - 1);
  if (rr < 1 || rr > v1 - 1)
    throw Error(ErrorKind::InvalidSpace,
                "locality r=" + std::to_string(rr) + " outside [1, " + std::to_string(v1 - 1) + "]");
  if (epsilons.size() != static_cast<std::size_t>(rr) || ells.size() != static_cast<std::size_t>(rr))
    throw Error(ErrorKind::InvalidSpace, "epsilons and ells must both have length r=" + std::to_string(rr));

  bool any = false;
  for (int i = 0; i < rr; ++i) {
    if (epsilons[i] != 0 && epsilons[i] != 1) throw Error(ErrorKind::InvalidSpace, "epsilon must be 0 or 1");
    if (epsilons[i] == 1) {
      if (ells[i] < 0) throw Error(ErrorKind::InvalidSpace, "ell must be nonnegative on active layers");
      any = true;
    } else {
      ells[i] = 0;
    }
  }
  if (!any) throw Error(ErrorKind::InvalidSpace, "at least one layer must be active");

  VSpec space{orientation, rr, std::move(epsilons), std::move(ells)};
  std::set<long long> orders;
  for (const auto& mono : space.basis()) {
    const long long order = static_cast<long long>(mono.power) * v1 + static_cast<long long>(mono.layer) * v2;
    if (!orders.insert(order).second)
      throw Error(ErrorKind::InvalidSpace, "two basis monomials share pole order " + std::to_string(order));
  }
  return space;
}

std::vector<Monomial> VSpec::basis() const {
  std::vector<Monomial> out;
  for (int i = 0; i < r; ++i) {
    if (!epsilons[i]) continue;
    for (int j = 0; j <= ells[i]; ++j) out.push_back(Monomial{i, j});
  }
  return out;
}

long long m_of_V(const VSpec& space, const SepCurve& curve) {
  const long long v1 = curve.fibre_pole_order(space.orientation);
  const long long v2 = curve.coordinate_pole_order(space.orientation);
  long long m = 0;
  for (int i = 0; i < space.r; ++i)
    if (space.epsilons[i]) m = std::max(m, space.ells[i] * v1 + i * v2);
  return m;
}

long long dim_V(const VSpec& space) {
  long long dim = 0;
  for (int i = 0; i < space.r; ++i)
    if (space.epsilons[i]) dim += 1 + space.ells[i];
  return dim;
}

VSpec completion(long long m, const SepCurve& curve, Axis orientation, std::optional<int> r) {
  if (m < 0) throw Error(ErrorKind::InvalidSpace, "completion needs m >= 0");
  const long long v1 = curve.fibre_pole_order(orientation);
  const long long v2 = curve.coordinate_pole_order(orientation);
  const int rr = r.value_or(static_cast<int>(v1) - 1);
  std::vector<int> eps(std::max(rr, 0), 0), ells(std::max(rr, 0), 0);
  const long long top = std::min<long long>(rr - 1, m / v2);
  for (long long i = 0; i <= top; ++i) {
    eps[i] = 1;
    ells[i] = static_cast<int>((m - i * v2) / v1);
  }
  return VSpec::make(curve, orientation, rr, std::move(eps), std::move(ells));
}

bool is_complete(const VSpec& space, const SepCurve& curve) {
  return completion(m_of_V(space, curve), curve, space.orientation, space.r) == space;
}

namespace {

void require_semigroup(const SepCurve& curve) {
  if (!curve.semigroup_certified())
    throw Error(ErrorKind::UncertifiedSemigroup,
                "H = <a,b> is neither certified nor asserted for this curve");
}

}  // namespace

long long riemann_gap(const VSpec& space, const SepCurve& curve) {
  require_semigroup(curve);
  return curve.semigroup().iota(m_of_V(space, curve)) - dim_V(space);
}

bool equals_riemann_space(const VSpec& space, const SepCurve& curve) { return riemann_gap(space, curve) == 0; }

std::optional<long long> riemann_gap_closed_form(const VSpec& space, const SepCurve& curve) {
  const long long v1 = curve.fibre_pole_order(space.orientation);
  const long long v2 = curve.coordinate_pole_order(space.orientation);
  if (space.r != v1 - 1 || !is_complete(space, curve)) return std::nullopt;
  const long long m = m_of_V(space, curve);
  const long long threshold = v2 * (v1 - 1);
  if (m < threshold) return 0;
  return 1 + (m - threshold) / v1;
}

}  // namespace seplrc

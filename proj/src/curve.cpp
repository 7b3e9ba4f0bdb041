#include "seplrc/curve.hpp"

#include <algorithm>

#include "seplrc/error.hpp"

namespace seplrc {

std::string_view to_string(Axis axis) { return axis == Axis::YFibre ? "y" : "x"; }

std::string_view to_string(WeierstrassCert cert) {
  switch (cert) {
    case WeierstrassCert::CoprimeAssumed: return "coprime-assumed";
    case WeierstrassCert::Rational: return "rational";
    case WeierstrassCert::LinearizedB: return "linearized-B";
    case WeierstrassCert::LinearizedA: return "linearized-A";
    case WeierstrassCert::UserAsserted: return "user-asserted";
  }
  return "unknown";
}

namespace {

int checked_degree(const UniPoly& poly, const char* name) {
  if (poly.is_zero()) throw Error(ErrorKind::ZeroPolynomial, std::string(name) + " is the zero polynomial");
  if (poly.degree() < 1) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must have degree >= 1");
  return poly.degree();
}

// Linearized with nonzero linear term, paired with a degree prime to p.
bool linearized_certificate(const Field& field, const UniPoly& linearized, int other_degree) {
  const auto p = static_cast<int>(field.characteristic());
  return linearized.is_linearized(field) && linearized.coefficient(1).value != 0 && other_degree >= 2 &&
         other_degree % p != 0;
}

}  // namespace

SepCurve::SepCurve(Field field, UniPoly A, UniPoly B)
    : field_(std::move(field)),
      A_(std::move(A)),
      B_(std::move(B)),
      a_(checked_degree(A_, "A")),
      b_(checked_degree(B_, "B")),
      semigroup_(a_, b_) {}

SepCurve SepCurve::make(Field field, UniPoly A, UniPoly B, CurveOverrides overrides) {
  SepCurve curve(std::move(field), std::move(A), std::move(B));
  const Field& F = curve.field_;

  if (curve.a_ == 1 || curve.b_ == 1)
    curve.weierstrass_ = WeierstrassCert::Rational;
  else if (linearized_certificate(F, curve.B_, curve.a_))
    curve.weierstrass_ = WeierstrassCert::LinearizedB;
  else if (linearized_certificate(F, curve.A_, curve.b_))
    curve.weierstrass_ = WeierstrassCert::LinearizedA;
  else if (overrides.assert_semigroup)
    curve.weierstrass_ = WeierstrassCert::UserAsserted;

  // Bucket x by B(x) (counting sort keeps x ascending inside a bucket),
  // then walk y ascending and read off the bucket of A(y).
  const std::uint32_t q = F.order();
  std::vector<std::uint32_t> bval(q);
  std::vector<std::uint32_t> start(std::size_t{q} + 1, 0);
  for (std::uint32_t x = 0; x < q; ++x) {
    bval[x] = curve.B_.eval(F, FieldElement{x}).value;
    ++start[bval[x] + 1];
  }
  for (std::uint32_t v = 0; v < q; ++v) start[v + 1] += start[v];
  std::vector<std::uint32_t> xs(q);
  std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
  for (std::uint32_t x = 0; x < q; ++x) xs[fill[bval[x]]++] = x;

  for (std::uint32_t y = 0; y < q; ++y) {
    const std::uint32_t target = curve.A_.eval(F, FieldElement{y}).value;
    for (std::uint32_t i = start[target]; i < start[target + 1]; ++i)
      curve.points_.push_back(AffinePoint{FieldElement{xs[i]}, FieldElement{y}});
  }
  return curve;
}

std::vector<Fibre> SepCurve::fibres(Axis axis) const {
  std::vector<AffinePoint> pts = points_;
  auto base_of = [axis](const AffinePoint& pt) { return axis == Axis::YFibre ? pt.y : pt.x; };
  auto coord_of = [axis](const AffinePoint& pt) { return axis == Axis::YFibre ? pt.x : pt.y; };
  std::sort(pts.begin(), pts.end(), [&](const AffinePoint& l, const AffinePoint& r) {
    return std::pair(base_of(l), coord_of(l)) < std::pair(base_of(r), coord_of(r));
  });

  const auto full = static_cast<std::size_t>(fibre_pole_order(axis));
  std::vector<Fibre> out;
  for (const auto& pt : pts) {
    if (out.empty() || out.back().base != base_of(pt)) {
      out.push_back(Fibre{base_of(pt), axis, {}, false});
    }
    out.back().points.push_back(pt);
  }
  for (auto& fibre : out) fibre.totally_split = fibre.points.size() == full;
  return out;
}

PowerSums SepCurve::power_sums(Axis axis) const {
  const UniPoly& poly = in_fibre_polynomial(axis);
  const int s = poly.degree();
  if (s < 2) throw Error(ErrorKind::DegreeTooSmall, "power sums need an in-fibre polynomial of degree >= 2");
  const Field& F = field_;
  const FieldElement lead_inv = F.inv(poly.leading());

  // sigma_i = (-1)^i lambda_{s-i} for the monic normalisation.
  std::vector<FieldElement> sigma(static_cast<std::size_t>(s) + 1);
  for (int i = 1; i <= s; ++i) {
    const FieldElement lambda = F.mul(poly.coefficient(static_cast<std::size_t>(s - i)), lead_inv);
    sigma[i] = (i % 2 == 0) ? lambda : F.neg(lambda);
  }

  // Newton-Girard: pi_i = (-1)^{i-1} i sigma_i - sum_{j<i} (-1)^j pi_{i-j} sigma_j.
  std::vector<FieldElement> pi(static_cast<std::size_t>(s - 1));
  for (int i = 1; i <= s - 2; ++i) {
    FieldElement acc = F.mul(F.from_integer(i), sigma[i]);
    if ((i - 1) % 2 != 0) acc = F.neg(acc);
    for (int j = 1; j < i; ++j) {
      FieldElement term = F.mul(pi[i - j], sigma[j]);
      if (j % 2 != 0) term = F.neg(term);
      acc = F.sub(acc, term);
    }
    pi[i] = acc;
  }
  return PowerSums{axis, std::vector<FieldElement>(pi.begin() + 1, pi.end())};
}

Applicability SepCurve::one_addition_applicable(Axis axis, bool has_constant_layer) const {
  const int s = in_fibre_polynomial(axis).degree();
  if (s < 2) return {false, "in-fibre polynomial has degree < 2"};
  const PowerSums ps = power_sums(axis);
  for (std::size_t i = 0; i < ps.sums.size(); ++i) {
    if (ps.sums[i].value != 0)
      return {false, "power sum pi_" + std::to_string(i + 1) + " of the in-fibre roots is nonzero"};
  }
  const auto p = static_cast<int>(field_.characteristic());
  if (s % p == 0)
    return {true, "power sums vanish and the characteristic " + std::to_string(p) + " divides the in-fibre degree " +
                      std::to_string(s)};
  if (!has_constant_layer)
    return {true, "power sums vanish and the space has no constant layer"};
  return {false, "characteristic " + std::to_string(p) + " does not divide the in-fibre degree " + std::to_string(s) +
                     " and the space contains the constant layer"};
}

}  // namespace seplrc

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seplrc/galois.hpp"
#include "seplrc/semigroup.hpp"

namespace seplrc {

/// Which coordinate is constant along a fibre.
///
/// YFibre: fibres are y = const, the in-fibre coordinate is x.
/// XFibre: fibres are x = const, the in-fibre coordinate is y.
enum class Axis { YFibre, XFibre };

std::string_view to_string(Axis axis);

enum class IrreducibilityCert { CoprimeDegrees };

enum class WeierstrassCert {
  CoprimeAssumed,  // <a,b> is only known to be contained in H
  Rational,        // a = 1 or b = 1: genus 0, H = N
  LinearizedB,     // B linearized, B'(X) != 0, p does not divide a
  LinearizedA,     // same criterion with the roles of X and Y swapped
  UserAsserted,
};

std::string_view to_string(WeierstrassCert cert);

struct CurveOverrides {
  bool assert_semigroup = false;
};

struct AffinePoint {
  FieldElement x;
  FieldElement y;

  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

struct Fibre {
  FieldElement base;
  Axis axis = Axis::YFibre;
  /// Sorted by the in-fibre coordinate.
  std::vector<AffinePoint> points;
  bool totally_split = false;
};

/// Power sums pi_1 .. pi_{deg-2} of the roots of the in-fibre polynomial.
struct PowerSums {
  Axis axis = Axis::YFibre;
  std::vector<FieldElement> sums;
};

struct Applicability {
  bool applicable = false;
  std::string reason;
};

/// The affine curve A(Y) = B(X) with gcd(deg A, deg B) = 1.
class SepCurve {
 public:
  static SepCurve make(Field field, UniPoly A, UniPoly B, CurveOverrides overrides = {});

  const Field& field() const { return field_; }
  const UniPoly& A() const { return A_; }
  const UniPoly& B() const { return B_; }
  int a() const { return a_; }
  int b() const { return b_; }
  const NumericalSemigroup& semigroup() const { return semigroup_; }
  int genus() const { return semigroup_.genus(); }
  IrreducibilityCert irreducibility_certificate() const { return IrreducibilityCert::CoprimeDegrees; }
  WeierstrassCert weierstrass_certificate() const { return weierstrass_; }
  bool semigroup_certified() const { return weierstrass_ != WeierstrassCert::CoprimeAssumed; }

  /// All affine rational points sorted by (y, x).
  const std::vector<AffinePoint>& points() const { return points_; }
  /// Nonempty fibres sorted by base value.
  std::vector<Fibre> fibres(Axis axis) const;

  /// Pole order at infinity of x^i y^j.
  long long valuation(long long i, long long j) const { return i * a_ + j * b_; }
  /// Pole order of the fibre function (y for YFibre, x for XFibre).
  int fibre_pole_order(Axis axis) const { return axis == Axis::YFibre ? b_ : a_; }
  /// Pole order of the in-fibre coordinate.
  int coordinate_pole_order(Axis axis) const { return axis == Axis::YFibre ? a_ : b_; }
  /// Polynomial whose roots are the in-fibre coordinates: B for YFibre, A for XFibre.
  const UniPoly& in_fibre_polynomial(Axis axis) const { return axis == Axis::YFibre ? B_ : A_; }

  /// Newton-Girard power sums of the in-fibre polynomial.
  PowerSums power_sums(Axis axis) const;

  /// One-addition repair condition: pi_1..pi_{deg-2} vanish and either the
  /// characteristic divides the in-fibre degree or constants are excluded.
  Applicability one_addition_applicable(Axis axis, bool has_constant_layer) const;

 private:
  SepCurve(Field field, UniPoly A, UniPoly B);

  Field field_;
  UniPoly A_;
  UniPoly B_;
  int a_ = 0;
  int b_ = 0;
  NumericalSemigroup semigroup_;
  WeierstrassCert weierstrass_ = WeierstrassCert::CoprimeAssumed;
  std::vector<AffinePoint> points_;
};

}  // namespace seplrc

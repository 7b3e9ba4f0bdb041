#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace seplrc {

/// Element of GF(p^m) in canonical encoding: polynomial-basis coordinates
/// c_0..c_{m-1} packed as sum c_i p^i.
struct FieldElement {
  std::uint32_t value = 0;

  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(p^m) with q = p^m <= 2^20.
///
/// Elements are plain canonical integers; arithmetic goes through the
/// field object, which owns log/antilog tables built once at construction.
/// Copies share the tables and are cheap.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Builds GF(p^m). When `modulus` (c_0..c_m, monic) is omitted the
  /// irreducible monic polynomial with the smallest base-p encoding is used.
  static Field make(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  /// Defining polynomial c_0..c_m, lowest degree first.
  const std::vector<std::uint32_t>& modulus() const;

  /// Checked conversion from a canonical integer.
  FieldElement element(std::uint64_t value) const;
  /// Image of an integer under Z -> GF(p).
  FieldElement from_integer(std::int64_t n) const;
  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement div(FieldElement x, FieldElement y) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;

  /// Smallest canonical integer of multiplicative order q-1.
  FieldElement primitive_element() const;
  std::uint64_t multiplicative_order(FieldElement x) const;

  friend bool operator==(const Field& lhs, const Field& rhs);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Univariate polynomial over a Field, lowest degree first, always trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<FieldElement> coefficients);

  static UniPoly from_values(const Field& field, std::span<const std::uint64_t> values);
  static UniPoly monomial(FieldElement coefficient, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  FieldElement coefficient(std::size_t i) const;
  FieldElement leading() const;

  /// Horner evaluation.
  FieldElement eval(const Field& field, FieldElement x) const;
  /// Distinct roots in GF(q), ascending canonical order. Exhaustive scan.
  std::vector<FieldElement> roots(const Field& field) const;
  /// True iff every nonzero coefficient sits at an exponent p^i.
  bool is_linearized(const Field& field) const;

  UniPoly add(const Field& field, const UniPoly& other) const;
  UniPoly sub(const Field& field, const UniPoly& other) const;
  UniPoly mul(const Field& field, const UniPoly& other) const;
  UniPoly scale(const Field& field, FieldElement c) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<FieldElement> coeffs_;
};

bool is_prime(std::uint64_t n);

}  // namespace seplrc

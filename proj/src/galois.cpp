#include "seplrc/galois.hpp"

#include <algorithm>
#include <string>

#include "seplrc/error.hpp"

namespace seplrc {

namespace {

using Digits = std::vector<std::uint32_t>;

// Monic-divisor remainder over GF(p); `divisor` is monic.
Digits prime_poly_mod(Digits dividend, const Digits& divisor, std::uint32_t p) {
  const std::size_t dd = divisor.size() - 1;
  while (dividend.size() > dd) {
    const std::uint64_t lead = dividend.back();
    if (lead != 0) {
      const std::size_t shift = dividend.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i) {
        const std::uint64_t sub = lead * divisor[i] % p;
        dividend[shift + i] = static_cast<std::uint32_t>((dividend[shift + i] + p - sub) % p);
      }
    }
    dividend.pop_back();
  }
  return dividend;
}

bool all_zero(const Digits& d) {
  return std::all_of(d.begin(), d.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Digits g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (all_zero(prime_poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Field::Impl {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::uint32_t modulus_bits = 0;  // p == 2 only
  std::uint32_t primitive = 1;
  std::vector<std::uint32_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;  // length q, log[0] unused

  Digits decode(std::uint32_t v) const {
    Digits d(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }

  std::uint32_t encode(const Digits& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    if (p == 2) return x ^ y;
    if (m == 1) return static_cast<std::uint32_t>((std::uint64_t{x} + y) % p);
    std::uint64_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      out += ((x % p + y % p) % p) * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return static_cast<std::uint32_t>(out);
  }

  std::uint32_t neg(std::uint32_t x) const {
    if (p == 2) return x;
    std::uint64_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      out += ((p - x % p) % p) * scale;
      x /= p;
      scale *= p;
    }
    return static_cast<std::uint32_t>(out);
  }

  // Schoolbook product reduced by the modulus; used only to build tables.
  std::uint32_t mul_direct(std::uint32_t x, std::uint32_t y) const {
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{x} * y % p);
    if (p == 2) {
      std::uint64_t prod = 0;
      for (std::uint32_t i = 0; i < m; ++i)
        if ((y >> i) & 1u) prod ^= std::uint64_t{x} << i;
      for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i)
        if ((prod >> i) & 1u) prod ^= std::uint64_t{modulus_bits} << (i - static_cast<int>(m));
      return static_cast<std::uint32_t>(prod);
    }
    const Digits a = decode(x), b = decode(y);
    Digits prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    Digits rem = prime_poly_mod(std::move(prod), modulus, p);
    rem.resize(m, 0);
    return encode(rem);
  }

  std::uint32_t pow_direct(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t acc = 1;
    while (e > 0) {
      if (e & 1u) acc = mul_direct(acc, x);
      x = mul_direct(x, x);
      e >>= 1;
    }
    return acc;
  }
};

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorKind::FieldTooLarge, "p^m exceeds 2^20");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q);

  if (modulus) {
    if (modulus->size() != m + 1 || modulus->back() != 1)
      throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree m");
    for (auto c : *modulus)
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    if (!is_irreducible(*modulus, p))
      throw Error(ErrorKind::Reducible, "supplied modulus factors over GF(p)");
    impl->modulus = *modulus;
  } else {
    Digits f(m + 1, 0);
    f[m] = 1;
    for (std::uint64_t code = 0; code < q; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (is_irreducible(f, p)) break;
    }
    impl->modulus = f;
  }
  if (p == 2)
    for (std::uint32_t i = 0; i <= m; ++i)
      if (impl->modulus[i]) impl->modulus_bits |= 1u << i;

  const std::uint32_t group = impl->q - 1;
  if (group == 1) {
    impl->primitive = 1;
  } else {
    const auto factors = prime_factors(group);
    for (std::uint32_t v = 2; v < impl->q; ++v) {
      const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t l) {
        return impl->pow_direct(v, group / l) != 1;
      });
      if (primitive) {
        impl->primitive = v;
        break;
      }
    }
  }

  impl->exp.resize(2 * std::size_t{group});
  impl->log.assign(impl->q, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    impl->exp[i] = cur;
    impl->exp[i + group] = cur;
    impl->log[cur] = i;
    cur = impl->mul_direct(cur, impl->primitive);
  }
  return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->m; }
std::uint32_t Field::order() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

FieldElement Field::element(std::uint64_t value) const {
  if (value >= impl_->q)
    throw Error(ErrorKind::InvalidArgument,
                "element " + std::to_string(value) + " outside GF(" + std::to_string(impl_->q) + ")");
  return FieldElement{static_cast<std::uint32_t>(value)};
}

FieldElement Field::from_integer(std::int64_t n) const {
  const std::int64_t p = impl_->p;
  return FieldElement{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElement Field::add(FieldElement x, FieldElement y) const { return {impl_->add(x.value, y.value)}; }
FieldElement Field::neg(FieldElement x) const { return {impl_->neg(x.value)}; }
FieldElement Field::sub(FieldElement x, FieldElement y) const {
  return {impl_->add(x.value, impl_->neg(y.value))};
}

FieldElement Field::mul(FieldElement x, FieldElement y) const {
  if (x.value == 0 || y.value == 0) return zero();
  return {impl_->exp[std::size_t{impl_->log[x.value]} + impl_->log[y.value]]};
}

FieldElement Field::inv(FieldElement x) const {
  if (x.value == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t group = impl_->q - 1;
  return {impl_->exp[(group - impl_->log[x.value]) % group]};
}

FieldElement Field::div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
  FieldElement acc = one();
  while (e > 0) {
    if (e & 1u) acc = mul(acc, x);
    x = mul(x, x);
    e >>= 1;
  }
  return acc;
}

FieldElement Field::primitive_element() const { return {impl_->primitive}; }

std::uint64_t Field::multiplicative_order(FieldElement x) const {
  if (x.value == 0) throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t order = impl_->q - 1;
  for (std::uint64_t l : prime_factors(order)) {
    while (order % l == 0 && pow(x, order / l) == one()) order /= l;
  }
  return order;
}

bool operator==(const Field& lhs, const Field& rhs) {
  return lhs.impl_ == rhs.impl_ ||
         (lhs.impl_->p == rhs.impl_->p && lhs.impl_->m == rhs.impl_->m &&
          lhs.impl_->modulus == rhs.impl_->modulus);
}

// --- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(std::vector<FieldElement> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::from_values(const Field& field, std::span<const std::uint64_t> values) {
  std::vector<FieldElement> c;
  c.reserve(values.size());
  for (auto v : values) c.push_back(field.element(v));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monomial(FieldElement coefficient, std::size_t degree) {
  std::vector<FieldElement> c(degree + 1);
  c[degree] = coefficient;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

FieldElement UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElement{};
}

FieldElement UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FieldElement UniPoly::eval(const Field& field, FieldElement x) const {
  FieldElement acc{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field.add(field.mul(acc, x), coeffs_[i]);
  return acc;
}

std::vector<FieldElement> UniPoly::roots(const Field& field) const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<FieldElement> out;
  for (std::uint32_t v = 0; v < field.order(); ++v)
    if (eval(field, FieldElement{v}).value == 0) out.push_back(FieldElement{v});
  return out;
}

bool UniPoly::is_linearized(const Field& field) const {
  if (is_zero()) return false;
  const std::uint64_t p = field.characteristic();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].value == 0) continue;
    std::uint64_t e = i;
    if (e == 0) return false;
    while (e % p == 0) e /= p;
    if (e != 1) return false;
  }
  return true;
}

UniPoly UniPoly::add(const Field& field, const UniPoly& other) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field.add(coefficient(i), other.coefficient(i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::sub(const Field& field, const UniPoly& other) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field.sub(coefficient(i), other.coefficient(i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::mul(const Field& field, const UniPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<FieldElement> c(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      c[i + j] = field.add(c[i + j], field.mul(coeffs_[i], other.coeffs_[j]));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scale(const Field& field, FieldElement s) const {
  std::vector<FieldElement> c(coeffs_);
  for (auto& v : c) v = field.mul(v, s);
  return UniPoly(std::move(c));
}

}  // namespace seplrc

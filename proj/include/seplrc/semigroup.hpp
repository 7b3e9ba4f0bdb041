#pragma once

#include <cstdint>
#include <vector>

namespace seplrc {

/// The numerical semigroup <a,b> with gcd(a,b) = 1.
///
/// Membership below the conductor is tabulated; everything from the
/// conductor up is a member. `iota(m)` counts members <= m, so it is the
/// dimension of L(mQ) whenever <a,b> is the Weierstrass semigroup at Q.
class NumericalSemigroup {
 public:
  NumericalSemigroup(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  int genus() const { return genus_; }
  int conductor() const { return conductor_; }

  bool contains(long long n) const;
  /// h_t, the t-th smallest member (h_1 = 0).
  long long element_at(long long t) const;
  /// max{t : h_t <= m}; 0 for negative m.
  long long iota(long long m) const;

 private:
  int a_;
  int b_;
  int genus_;
  int conductor_;
  std::vector<bool> member_;         // [0, conductor)
  std::vector<long long> prefix_;    // members in [0, i]
  std::vector<long long> members_;   // members below conductor, ascending
};

}  // namespace seplrc

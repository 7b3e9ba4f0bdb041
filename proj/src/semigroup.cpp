#include "seplrc/semigroup.hpp"

#include <numeric>
#include <string>

#include "seplrc/error.hpp"

namespace seplrc {

NumericalSemigroup::NumericalSemigroup(int a, int b) : a_(a), b_(b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::InvalidArgument, "semigroup generators must be positive");
  if (std::gcd(a, b) != 1)
    throw Error(ErrorKind::DegreesNotCoprime,
                "gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
  conductor_ = (a - 1) * (b - 1);
  genus_ = conductor_ / 2;
  member_.assign(conductor_, false);
  for (int la = 0; la < conductor_; la += a)
    for (int n = la; n < conductor_; n += b) member_[n] = true;
  prefix_.resize(conductor_);
  long long count = 0;
  for (int n = 0; n < conductor_; ++n) {
    if (member_[n]) {
      ++count;
      members_.push_back(n);
    }
    prefix_[n] = count;
  }
}

bool NumericalSemigroup::contains(long long n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return member_[n];
}

long long NumericalSemigroup::element_at(long long t) const {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "semigroup index starts at 1");
  const auto below = static_cast<long long>(members_.size());
  if (t <= below) return members_[t - 1];
  return conductor_ + (t - below - 1);
}

long long NumericalSemigroup::iota(long long m) const {
  if (m < 0) return 0;
  if (m >= conductor_) return m + 1 - genus_;
  return prefix_[m];
}

}  // namespace seplrc

#include "metab/bound.hpp"

#include <cmath>
#include <sstream>

namespace metab {

double Bound::log2_of(const Int& v) {
  if (sgn(v) <= 0) return -1e300;
  long e;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log2(m) + static_cast<double>(e);
}

Bound Bound::from_log2(double l) {
  Bound b;
  b.exact_ = false;
  b.log2_ = l;
  return b;
}

std::string Bound::str() const {
  if (exact_) return value_.get_str();
  std::ostringstream os;
  os.precision(12);
  os << "2^" << log2_;
  return os.str();
}

namespace {

double log2_sum(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b < -1e299) return a;
  return a + std::log2(1.0 + std::exp2(b - a));
}

}  // namespace

Bound operator+(const Bound& a, const Bound& b) {
  if (a.exact_ && b.exact_) return Bound(a.value_ + b.value_);
  return Bound::from_log2(log2_sum(a.log2_, b.log2_));
}

Bound operator*(const Bound& a, const Bound& b) {
  if (a.exact_ && b.exact_ && a.log2_ + b.log2_ < Bound::max_exact_bits) return Bound(a.value_ * b.value_);
  if ((a.exact_ && a.value_ == 0) || (b.exact_ && b.value_ == 0)) return Bound(Int(0));
  return Bound::from_log2(a.log2_ + b.log2_);
}

bool operator<=(const Bound& a, const Bound& b) {
  if (a.exact_ && b.exact_) return a.value_ <= b.value_;
  return a.log2_ <= b.log2_ + 1e-9;
}

Bound Bound::pow(const Int& e) const {
  if (e == 0) return Bound(Int(1));
  if (exact_ && value_ <= 1) return *this;
  double l = log2_ * e.get_d();
  if (exact_ && l < max_exact_bits) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), e.get_ui());
    return Bound(r);
  }
  return from_log2(l);
}

}  // namespace metab

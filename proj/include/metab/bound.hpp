#pragma once

#include <string>

#include "metab/order.hpp"

namespace metab {

// Non-negative integer bound; kept exact while it fits, otherwise as log2.
class Bound {
 public:
  Bound() = default;
  Bound(const Int& v) : value_(v), log2_(log2_of(v)) {}
  static Bound from_log2(double l);

  bool exact() const { return exact_; }
  const Int& value() const { return value_; }
  double log2() const { return log2_; }
  std::string str() const;

  static double log2_of(const Int& v);
  static constexpr double max_exact_bits = 1e6;

  friend Bound operator+(const Bound& a, const Bound& b);
  friend Bound operator*(const Bound& a, const Bound& b);
  friend bool operator<=(const Bound& a, const Bound& b);
  friend bool operator<=(const Int& a, const Bound& b) { return Bound(a) <= b; }
  Bound pow(const Int& e) const;

 private:
  Int value_ = 0;
  double log2_ = -1e300;
  bool exact_ = true;
};

}  // namespace metab

#pragma once

#include <compare>
#include <string>

#include "mic/numpoly.hpp"

namespace mic {

/// The nonnegative real r^(1/k), kept symbolic. Canonical: r is not a perfect
/// d-th power for any divisor d > 1 of k.
class ConstantValue {
 public:
  ConstantValue(Rational r, unsigned long k = 1);

  const Rational& radicand() const { return r_; }
  unsigned long root() const { return k_; }

  /// Exact comparison by cross-powering: r1^k2 against r2^k1.
  friend std::strong_ordering operator<=>(const ConstantValue& a, const ConstantValue& b);
  friend bool operator==(const ConstantValue& a, const ConstantValue& b) { return a.r_ == b.r_ && a.k_ == b.k_; }

  /// "1/2" when k = 1, otherwise "(1/2)^(1/2)".
  std::string to_string() const;
  double approx() const;

 private:
  Rational r_;
  unsigned long k_;
};

/// Exact k-th root of a nonnegative rational when it exists.
bool exact_root(const Rational& r, unsigned long k, Rational& out);

}  // namespace mic

#pragma once

#include <vector>

#include "mic/numpoly.hpp"

namespace mic {

/// Consecutive Farey fractions a2/b2 < a1/b1 with a1*b2 - a2*b1 = 1.
/// The high endpoint carries index 1, the low endpoint index 2.
class FareyPair {
 public:
  /// Throws DomainError unless lo < hi and the determinant is exactly 1.
  static FareyPair from_endpoints(const Rational& lo, const Rational& hi);

  const BigInt& a1() const { return a1_; }
  const BigInt& b1() const { return b1_; }
  const BigInt& a2() const { return a2_; }
  const BigInt& b2() const { return b2_; }
  Rational lo() const { return make_rational(a2_, b2_); }
  Rational hi() const { return make_rational(a1_, b1_); }
  Interval interval() const { return Interval(lo(), hi()); }

  bool operator==(const FareyPair&) const = default;

 private:
  FareyPair(BigInt a1, BigInt b1, BigInt a2, BigInt b2)
      : a1_(std::move(a1)), b1_(std::move(b1)), a2_(std::move(a2)), b2_(std::move(b2)) {}
  BigInt a1_, b1_, a2_, b2_;
};

/// Reduced fractions in [0, 1] with denominator <= order, ascending.
std::vector<Rational> farey_sequence(long order);

/// Determinant test a1*b2 - a2*b1 == 1 for hi = a1/b1, lo = a2/b2.
bool is_consecutive_pair(const Rational& lo, const Rational& hi);

/// (a1 + a2) / (b1 + b2); already in lowest terms for a consecutive pair.
Rational mediant(const FareyPair& pair);

/// [lo, mediant] and [mediant, hi], both consecutive pairs again.
std::pair<FareyPair, FareyPair> split_at_mediant(const FareyPair& pair);

/// Adjacent pairs of farey_sequence(order).
std::vector<FareyPair> farey_intervals(long order);

}  // namespace mic

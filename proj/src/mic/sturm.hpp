#pragma once

// Exact real-root machinery over Z[x]: squarefree decomposition, Sturm
// sequences and a sign test on closed rational intervals.

#include <optional>
#include <vector>

#include "mic/numpoly.hpp"

namespace mic {

/// Factors g_1, g_2, ... with p = c * prod g_i^i (Yun). Each g_i is primitive
/// and squarefree; trailing unit factors are dropped.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// Product of the factors of odd multiplicity. Its real roots are exactly the
/// points where p changes sign.
IntPoly odd_multiplicity_part(const IntPoly& p);

class SturmSequence {
 public:
  /// p must be squarefree and nonzero.
  explicit SturmSequence(const IntPoly& p);

  int variations(const Rational& x) const;
  /// Distinct roots in the half-open interval (a, b].
  std::size_t roots_in_half_open(const Rational& a, const Rational& b) const;
  /// Distinct roots in the open interval (a, b).
  std::size_t roots_in_open(const Rational& a, const Rational& b) const;
  std::size_t roots_in_closed(const Rational& a, const Rational& b) const;

  const IntPoly& base() const { return seq_.front(); }
  const std::vector<IntPoly>& polys() const { return seq_; }

 private:
  std::vector<IntPoly> seq_;
};

/// Decides q >= 0 on the closed interval. On failure returns a rational point
/// of the interval where q < 0; endpoints are preferred.
std::optional<Rational> find_negative_point(const IntPoly& q, const Interval& iv);

}  // namespace mic

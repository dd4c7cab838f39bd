#pragma once

// Monic integer polynomials that are small at finitely many numeric points.

#include <string>
#include <vector>

#include "mic/numpoly.hpp"

namespace mic {

/// Decimal text ("3.14159", "-1e-3", "2/7"); the value is taken exactly.
struct NumericPoint {
  std::string re;
  std::string im = "0";
};

/// Raised when the interval check cannot confirm the bound at the working
/// precision; retrying with more bits may succeed.
class PrecisionError : public LimitError {
 public:
  using LimitError::LimitError;
};

enum class SmallValueMethod {
  PowerCombination,  ///< F = x^n + sum b_j P^j from a short vector P
  DirectCvp,         ///< nearest lattice point over all monic degree-n F
};

struct SmallValueResult {
  IntPoly poly;
  unsigned long degree = 0;
  SmallValueMethod method = SmallValueMethod::PowerCombination;
  IntPoly p;  ///< the P of the power combination; zero for DirectCvp
  /// Rigorous upper bounds for |F(alpha_i)|, rounded up to doubles.
  std::vector<double> upper_bounds;
};

/// Exact value of a decimal or fraction string.
Rational parse_decimal(std::string_view text);

/// Points must be distinct and closed under conjugation; 0 < epsilon < 1.
/// The result satisfies |F(alpha_i)| < epsilon, checked in outward-rounded
/// interval arithmetic with `precision` bits.
SmallValueResult small_value_polynomial(const std::vector<NumericPoint>& points, const Rational& epsilon,
                                        unsigned precision = 256, unsigned long max_degree = 64);

}  // namespace mic

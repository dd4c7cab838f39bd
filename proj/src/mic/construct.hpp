#pragma once

// Monic integer polynomials with prescribed values at rational points.

#include <optional>
#include <vector>

#include "mic/farey.hpp"
#include "mic/numpoly.hpp"

namespace mic {

/// Raised when no admissible degree exists below the caller's cap.
class DegreeLimitError : public LimitError {
 public:
  DegreeLimitError(const std::string& what, std::optional<BigInt> minimal)
      : LimitError(what), minimal_degree(std::move(minimal)) {}
  std::optional<BigInt> minimal_degree;
};

/// Degree-n monic f with f(a_i/b_i) = A_i / b_i^n at both endpoints of the pair.
/// Requires n >= 2 and A_i = a_i^n (mod b_i).
IntPoly pair_polynomial(const FareyPair& pair, unsigned long n, const BigInt& target1, const BigInt& target2);

/// Adds the mediant correction with exponent split (j, n-1-j) so the value at
/// the mediant a3/b3 is also prescribed: f(a3/b3) = A3 / b3^n.
IntPoly triple_polynomial(const FareyPair& pair, unsigned long n, const BigInt& target1, const BigInt& target2,
                          const BigInt& target3, unsigned long split);

/// Quantities of the inductive multi-point construction. Index i refers to
/// points[i]; entries of `e`, `e1`, `e2` are only meaningful for i >= 1.
struct ConstructionState {
  std::vector<Rational> points;
  std::vector<BigInt> e;   ///< e[j] = prod_{i<j} (a_j b_i - a_i b_j)
  BigInt d = 1;            ///< lcm |e[1..k-1]|
  std::vector<BigInt> d1;  ///< part of d supported on primes dividing b_j
  std::vector<BigInt> d2;  ///< part of d coprime to b_j
  std::vector<BigInt> e1;
  std::vector<BigInt> e2;
  unsigned long m = 1;          ///< exceeds every prime exponent of d
  BigInt degree;                ///< minimal n >= k*m satisfying both congruence families
  std::vector<ExtendedGcd> inverses;  ///< a_i l_i - b_i f_i = 1
};

/// Computes the state, including the minimal admissible degree, for the
/// inductive construction. Points must be distinct non-integers.
ConstructionState construction_state(const std::vector<Rational>& points);
BigInt admissible_degree(const std::vector<Rational>& points);

enum class MultipointStrategy {
  Inductive,      ///< only the inductive construction at its admissible degree
  MinimalDegree,  ///< smallest n with a solution, found by integer linear algebra
  Automatic,      ///< inductive when its degree fits the cap, else minimal degree
};

struct MultipointResult {
  unsigned long degree = 0;
  IntPoly poly;
  MultipointStrategy method = MultipointStrategy::Inductive;
  /// Inductive only: F_1, F_2, ..., F_k after each step.
  std::vector<IntPoly> steps;
};

/// Monic F of degree n <= max_degree with b_i^n F(a_i/b_i) = 1 for every point.
MultipointResult multipoint_monic(const std::vector<Rational>& points, unsigned long max_degree,
                                  MultipointStrategy strategy = MultipointStrategy::Automatic);

/// Smallest-degree monic F (n <= max_degree) with F(a_i/b_i) = 1/b_i^n, or
/// nullopt when none exists up to the cap.
std::optional<MultipointResult> minimal_degree_monic(const std::vector<Rational>& points, unsigned long max_degree);

/// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 1). Moduli are
/// factored by trial division, so they must be desk-sized.
BigInt multiplicative_order(const BigInt& a, const BigInt& m);

}  // namespace mic

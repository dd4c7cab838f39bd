#pragma once

// Independent reference computations used as test oracles. Nothing here
// calls the routines under test.

#include <gmpxx.h>

#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline mpq_class qpow(const mpq_class& x, unsigned long e) {
  mpq_class r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= x;
  return r;
}

/// sum c_i x^i by explicit powers.
template <class C>
mpq_class eval(const std::vector<C>& coeffs, const mpq_class& x) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += mpq_class(coeffs[i]) * qpow(x, i);
  return s;
}

/// All reduced fractions in [0, 1] with denominator <= n, sorted.
inline std::vector<mpq_class> farey_brute(long n) {
  std::set<mpq_class> seen;
  for (long b = 1; b <= n; ++b)
    for (long a = 0; a <= b; ++a) {
      mpq_class q(a, b);
      q.canonicalize();
      seen.insert(q);
    }
  return {seen.begin(), seen.end()};
}

inline long totient(long m) {
  long c = 0;
  for (long k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++c;
  return c;
}

/// Boole's rule; exact for polynomials of degree <= 5.
template <class F>
mpq_class boole(F&& f, const mpq_class& a, const mpq_class& b) {
  const mpq_class h = (b - a) / 4;
  return (b - a) / 90 * (7 * f(a) + 32 * f(a + h) + 12 * f(a + 2 * h) + 32 * f(a + 3 * h) + 7 * f(b));
}

inline std::vector<mpz_class> random_coeffs(std::mt19937_64& rng, std::size_t degree, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<mpz_class> c(degree + 1);
  for (auto& v : c) v = d(rng);
  return c;
}

inline mpq_class random_rational(std::mt19937_64& rng, long num_range, long den_max) {
  std::uniform_int_distribution<long> n(-num_range, num_range), d(1, den_max);
  mpq_class q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

/// Determinant by Bareiss fraction-free elimination.
inline mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

enum class GridVerdict { AtMost, Exceeds, Unknown };

/// Brute-force sup-norm oracle: exact values on a uniform grid plus a
/// derivative (Lipschitz) bound for the gaps between grid points.
inline GridVerdict grid_oracle(const std::vector<mpz_class>& c, const mpq_class& lo, const mpq_class& hi,
                               const mpq_class& bound, unsigned points = 400) {
  const mpq_class h = (hi - lo) / (points - 1);
  mpq_class best = 0;
  for (unsigned i = 0; i < points; ++i) {
    const mpq_class v = abs(eval(c, lo + h * i));
    if (v > bound) return GridVerdict::Exceeds;
    if (v > best) best = v;
  }
  const mpq_class r = std::max(abs(lo), abs(hi));
  mpq_class lip = 0;
  for (std::size_t k = 1; k < c.size(); ++k) lip += abs(mpq_class(c[k])) * k * qpow(r, k - 1);
  return best + lip * h / 2 <= bound ? GridVerdict::AtMost : GridVerdict::Unknown;
}

}  // namespace oracle

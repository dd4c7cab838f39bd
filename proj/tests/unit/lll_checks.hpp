#pragma once

// Property checks for LLL output, recomputed from scratch.

#include <string>

#include "mic/lattice.hpp"
#include "oracles.hpp"

namespace checks {

/// Empty on success, else the first violated property.
inline std::string lll_violation(const mic::GramMatrix& g, const mic::ReductionResult& r) {
  using mic::Rational;
  const std::size_t n = g.dim();
  // U^T G U
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) s += Rational(r.u[a][i]) * g(a, b) * Rational(r.u[b][j]);
      if (s != r.gram_reduced(i, j)) return "gram_reduced != U^T G U";
    }
  if (abs(oracle::determinant(r.u)) != 1) return "|det U| != 1";
  // Gram-Schmidt from the reduced Gram matrix.
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n)), rr(n, std::vector<Rational>(n));
  std::vector<Rational> bstar(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      rr[i][j] = r.gram_reduced(i, j);
      for (std::size_t k = 0; k < j; ++k) rr[i][j] -= mu[j][k] * rr[i][k];
      mu[i][j] = rr[i][j] / bstar[j];
    }
    bstar[i] = r.gram_reduced(i, i);
    for (std::size_t k = 0; k < i; ++k) bstar[i] -= mu[i][k] * rr[i][k];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(mu[i][j]) > Rational(1, 2)) return "size reduction fails";
  for (std::size_t i = 1; i < n; ++i)
    if (bstar[i] < (r.delta - mu[i][i - 1] * mu[i][i - 1]) * bstar[i - 1]) return "Lovasz condition fails";
  for (std::size_t i = 0; i < n; ++i)
    if (bstar[i] != r.gs_norms[i]) return "reported Gram-Schmidt norms differ";
  // first^n <= (4/(4 delta - 1))^((n-1) n) det G, by cross-powering.
  const Rational alpha = Rational(4) / (4 * r.delta - 1);
  if (oracle::qpow(r.gram_reduced(0, 0), n) > oracle::qpow(alpha, (n - 1) * n) * g.determinant())
    return "first vector bound fails";
  return {};
}

/// Positive-definite Gram matrix of random rational vectors.
inline mic::RationalMatrix random_rows(std::mt19937_64& rng, std::size_t dim) {
  for (;;) {
    mic::RationalMatrix rows(dim, std::vector<mic::Rational>(dim));
    std::vector<std::vector<mpz_class>> ints(dim, std::vector<mpz_class>(dim));
    std::uniform_int_distribution<long> c(-40, 40), d(1, 6);
    for (std::size_t i = 0; i < dim; ++i) {
      const long den = d(rng);
      for (std::size_t j = 0; j < dim; ++j) {
        const long v = c(rng);
        ints[i][j] = v;
        rows[i][j] = mic::make_rational(mpz_class(v), mpz_class(den));
      }
    }
    if (oracle::determinant(ints) != 0) return rows;
  }
}

}  // namespace checks

#pragma once

// Exact LLL under an arbitrary positive-definite rational quadratic form, and
// the witness search on Farey intervals built on it.

#include <optional>
#include <vector>

#include "mic/certify.hpp"
#include "mic/farey.hpp"
#include "mic/numpoly.hpp"

namespace mic {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<BigInt>>;

/// Symmetric positive-definite rational matrix; checked on construction.
class GramMatrix {
 public:
  explicit GramMatrix(RationalMatrix entries);

  std::size_t dim() const { return g_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return g_[i][j]; }
  const RationalMatrix& entries() const { return g_; }
  Rational determinant() const;

 private:
  RationalMatrix g_;
};

/// G_ij = integral over iv of polys_i * polys_j.
GramMatrix gram_matrix(const std::vector<RatPoly>& polys, const Interval& iv);
/// G_ij = <rows_i, rows_j> under the standard inner product.
GramMatrix gram_from_vectors(const RationalMatrix& rows);

struct ReductionResult {
  GramMatrix gram_reduced;
  /// Column j holds the coordinates of reduced vector j in the input basis,
  /// so gram_reduced = U^T G U.
  IntegerMatrix u;
  RationalMatrix mu;               ///< mu[i][j] for j < i
  std::vector<Rational> gs_norms;  ///< squared Gram-Schmidt lengths
  Rational delta;
};

/// Requires 1/4 < delta < 1.
ReductionResult lll_reduce(const GramMatrix& g, const Rational& delta = Rational(3, 4));

/// Babai nearest plane. target_dots[j] = <t, r_j> for the reduced vectors r_j;
/// returns integer coordinates c with sum c_j r_j close to t.
std::vector<BigInt> nearest_plane(const ReductionResult& red, const std::vector<Rational>& target_dots);

struct SearchBasis {
  FareyPair pair;
  unsigned long n;
  IntPoly p;  ///< pair_polynomial with targets (1, 1)
  IntPoly v;  ///< (b1 x - a1)(b2 x - a2)
  std::vector<IntPoly> members;  ///< p, v, x v, ..., x^(n-3) v
};

/// Requires n >= 3 and a_i^n = 1 (mod b_i) for both endpoints.
SearchBasis build_search_basis(const FareyPair& pair, unsigned long n);

enum class SearchStrategy {
  SublatticeCvp,  ///< reduce the endpoint-vanishing part, centre on -p
  FullBasis,      ///< reduce all members, keep combinations monic in p
};

struct SearchOptions {
  Rational delta = Rational(3, 4);
  unsigned radius = 1;
  SearchStrategy strategy = SearchStrategy::SublatticeCvp;
  /// Refuse enumerations larger than this many offset vectors.
  std::size_t max_candidates = 2000000;
  CertifyOptions certify;
};

/// First candidate, in order of L2 norm on the interval with lexicographic
/// ties, whose sup norm certifies at witness_base(pair)^n.
std::optional<WitnessRecord> search_witness(const FareyPair& pair, unsigned long n, const SearchOptions& options = {});

}  // namespace mic

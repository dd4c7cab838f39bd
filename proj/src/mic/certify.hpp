#pragma once

// Exact decision of sup-norm bounds on rational intervals.

#include <optional>
#include <string>
#include <utility>

#include "mic/constant_value.hpp"
#include "mic/farey.hpp"
#include "mic/numpoly.hpp"

namespace mic {

enum class Verdict { CertifiedAtMost, Refuted, Inconclusive };
enum class CertMethod { Sturm, Bernstein };

struct NormCertificate {
  Verdict verdict = Verdict::Inconclusive;
  Rational bound;
  CertMethod method = CertMethod::Sturm;
  /// Present exactly when refuted; |f| > bound there.
  std::optional<Rational> refutation_point;
  unsigned depth = 0;
};

/// key=value lines: status, bound, method, refutation_point.
std::string format_certificate(const NormCertificate& cert);
const char* verdict_name(Verdict v);
const char* method_name(CertMethod m);

/// Prefilter depth: MIC_MAX_DEPTH when set to a nonnegative integer, else 12.
unsigned default_prefilter_depth();

struct CertifyOptions {
  bool use_prefilter = true;
  std::optional<unsigned> prefilter_depth;  ///< defaults to default_prefilter_depth()
};

/// Sufficient test: Bernstein coefficients of B - f and B + f on subintervals.
/// Sound but incomplete; Inconclusive once max_depth is exhausted.
NormCertificate bernstein_prefilter(const RatPoly& f, const Interval& iv, const Rational& bound, unsigned max_depth);

/// Decides sup |f| <= bound on the closed interval; never Inconclusive.
NormCertificate decide_sup_bound(const RatPoly& f, const Interval& iv, const Rational& bound,
                                 const CertifyOptions& options = {});
NormCertificate decide_sup_bound(const IntPoly& f, const Interval& iv, const Rational& bound,
                                 const CertifyOptions& options = {});

/// lo <= sup |f| <= hi with hi - lo <= tol.
std::pair<Rational, Rational> sup_norm_enclosure(const RatPoly& f, const Interval& iv, const Rational& tol);

/// |f(a/b)| for monic integer f and non-integer a/b; always >= 1/b^deg f.
Rational rational_point_lower_bound(const IntPoly& f, const Rational& point);

/// max 1/b over the non-integer endpoints of the pair. Integer endpoints
/// contribute nothing since x - m vanishes there; a pair with two integer
/// endpoints has no such base and raises DomainError.
Rational witness_base(const FareyPair& pair);

struct WitnessRecord {
  FareyPair pair;
  IntPoly poly;
  unsigned long degree = 0;
  Rational bound;  ///< witness_base(pair)^degree
  NormCertificate certificate;
  ConstantValue tm_upper{Rational(0)};  ///< (bound, degree), canonicalized
  Rational endpoint_lower_bound;        ///< max |f| over non-integer endpoints
  bool norm_equals_bound() const {
    return certificate.verdict == Verdict::CertifiedAtMost && endpoint_lower_bound == bound;
  }
};

/// Certifies sup |f| <= witness_base(pair)^n. A refuted check still returns a
/// record, carrying the Refuted certificate.
WitnessRecord verify_witness(const FareyPair& pair, const IntPoly& f, const CertifyOptions& options = {});

}  // namespace mic

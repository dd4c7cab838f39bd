#include "mic/certify.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "mic/sturm.hpp"

namespace mic {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedAtMost: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* method_name(CertMethod m) { return m == CertMethod::Sturm ? "sturm" : "bernstein"; }

std::string format_certificate(const NormCertificate& cert) {
  std::ostringstream out;
  out << "status=" << verdict_name(cert.verdict) << '\n';
  out << "bound=" << to_string(cert.bound) << '\n';
  out << "method=" << method_name(cert.method) << '\n';
  if (cert.refutation_point) out << "refutation_point=" << to_string(*cert.refutation_point) << '\n';
  return out.str();
}

unsigned default_prefilter_depth() {
  const char* env = std::getenv("MIC_MAX_DEPTH");
  if (env == nullptr || *env == '\0') return 12;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 64) return 12;
  return static_cast<unsigned>(v);
}

namespace {

bool all_nonnegative(const std::vector<Rational>& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) >= 0; });
}

struct PrefilterRun {
  unsigned max_depth;
  unsigned deepest = 0;
  bool hit_limit = false;
  std::optional<Rational> violation;

  // upper: Bernstein coefficients of B - f, lower: of B + f, on [a, b].
  void visit(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Rational& a,
             const Rational& b, unsigned depth) {
    if (violation) return;
    deepest = std::max(deepest, depth);
    // End coefficients are exact values at a and b.
    if (sgn(upper.front()) < 0 || sgn(lower.front()) < 0) {
      violation = a;
      return;
    }
    if (sgn(upper.back()) < 0 || sgn(lower.back()) < 0) {
      violation = b;
      return;
    }
    if (all_nonnegative(upper) && all_nonnegative(lower)) return;
    if (depth == max_depth) {
      hit_limit = true;
      return;
    }
    auto [ul, ur] = bernstein_split(upper);
    auto [ll, lr] = bernstein_split(lower);
    const Rational mid = (a + b) / 2;
    visit(ul, ll, a, mid, depth + 1);
    visit(ur, lr, mid, b, depth + 1);
  }
};

NormCertificate sturm_decision(const RatPoly& f, const Interval& iv, const Rational& bound) {
  NormCertificate cert;
  cert.bound = bound;
  cert.method = CertMethod::Sturm;
  const RatPoly b = RatPoly::constant(bound);
  // sup |f| <= B  iff  B - f >= 0 and B + f >= 0 on the interval.
  for (const RatPoly& side : {b - f, b + f}) {
    if (auto bad = find_negative_point(clear_denominators(side), iv)) {
      cert.verdict = Verdict::Refuted;
      cert.refutation_point = std::move(bad);
      return cert;
    }
  }
  cert.verdict = Verdict::CertifiedAtMost;
  return cert;
}

}  // namespace

NormCertificate bernstein_prefilter(const RatPoly& f, const Interval& iv, const Rational& bound, unsigned max_depth) {
  if (sgn(bound) < 0) throw DomainError("bound must be nonnegative");
  const RatPoly b = RatPoly::constant(bound);
  const RatPoly upper = b - f;
  const RatPoly lower = b + f;
  std::size_t degree = 0;
  if (!f.is_zero()) degree = f.degree().value();
  PrefilterRun run{max_depth, 0, false, std::nullopt};
  run.visit(to_bernstein(upper, iv, degree), to_bernstein(lower, iv, degree), iv.lo(), iv.hi(), 0);

  NormCertificate cert;
  cert.bound = bound;
  cert.method = CertMethod::Bernstein;
  cert.depth = run.deepest;
  if (run.violation) {
    cert.verdict = Verdict::Refuted;
    cert.refutation_point = run.violation;
  } else if (run.hit_limit) {
    cert.verdict = Verdict::Inconclusive;
  } else {
    cert.verdict = Verdict::CertifiedAtMost;
  }
  return cert;
}

NormCertificate decide_sup_bound(const RatPoly& f, const Interval& iv, const Rational& bound,
                                 const CertifyOptions& options) {
  if (sgn(bound) < 0) throw DomainError("bound must be nonnegative");
  unsigned depth = 0;
  if (options.use_prefilter) {
    depth = options.prefilter_depth.value_or(default_prefilter_depth());
    NormCertificate quick = bernstein_prefilter(f, iv, bound, depth);
    if (quick.verdict != Verdict::Inconclusive) return quick;
  }
  NormCertificate cert = sturm_decision(f, iv, bound);
  cert.depth = depth;
  return cert;
}

NormCertificate decide_sup_bound(const IntPoly& f, const Interval& iv, const Rational& bound,
                                 const CertifyOptions& options) {
  return decide_sup_bound(to_rational(f), iv, bound, options);
}

std::pair<Rational, Rational> sup_norm_enclosure(const RatPoly& f, const Interval& iv, const Rational& tol) {
  if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");
  Rational lo = std::max<Rational>(abs(poly_eval(f, iv.lo())), abs(poly_eval(f, iv.hi())));
  Rational hi = 0;
  for (const auto& c : to_bernstein(f, iv)) hi += abs(c);
  hi = std::max<Rational>(hi, Rational(1));
  const CertifyOptions opts;
  if (decide_sup_bound(f, iv, lo, opts).verdict == Verdict::CertifiedAtMost) return {lo, lo};
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    NormCertificate c = decide_sup_bound(f, iv, mid, opts);
    if (c.verdict == Verdict::CertifiedAtMost) {
      hi = mid;
    } else {
      lo = std::max<Rational>(mid, abs(poly_eval(f, *c.refutation_point)));
    }
  }
  return {lo, hi};
}

Rational rational_point_lower_bound(const IntPoly& f, const Rational& point) {
  if (!f.is_monic()) throw DomainError("polynomial must be monic");
  if (point.get_den() == 1) throw DomainError("point " + to_string(point) + " is an integer");
  const std::size_t n = f.degree().value();
  // b^n f(a/b) is an integer, and nonzero because a monic integer polynomial
  // has no non-integer rational root.
  const BigInt scaled = homogeneous_eval(f, point.get_num(), point.get_den());
  if (scaled == 0) throw std::logic_error("monic integer polynomial vanished at a non-integer rational");
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), point.get_den_mpz_t(), n);
  return make_rational(abs(scaled), denom);
}

Rational witness_base(const FareyPair& pair) {
  Rational base = 0;
  bool found = false;
  for (const BigInt* b : {&pair.b1(), &pair.b2()}) {
    if (*b == 1) continue;
    base = std::max(base, make_rational(BigInt(1), *b));
    found = true;
  }
  if (!found) throw DomainError("interval between two integers has no Farey witness base");
  return base;
}

WitnessRecord verify_witness(const FareyPair& pair, const IntPoly& f, const CertifyOptions& options) {
  if (!f.is_monic()) throw DomainError("witness must be monic");
  const std::size_t n = f.degree().value();
  if (n == 0) throw DomainError("witness must have degree at least 1");
  const Rational base = witness_base(pair);
  Rational bound;
  mpz_pow_ui(bound.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(bound.get_den_mpz_t(), base.get_den_mpz_t(), n);

  WitnessRecord rec{pair, f, n, bound, decide_sup_bound(f, pair.interval(), bound, options), ConstantValue(bound, n),
                    Rational(0)};
  for (const Rational& x : {pair.lo(), pair.hi()}) {
    if (x.get_den() != 1) rec.endpoint_lower_bound = std::max(rec.endpoint_lower_bound, rational_point_lower_bound(f, x));
  }
  return rec;
}

}  // namespace mic

#include "mic/mic.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "mic/certify.hpp"
#include "mic/constants.hpp"
#include "mic/construct.hpp"
#include "mic/farey.hpp"
#include "mic/lattice.hpp"
#include "mic/small_values.hpp"
#include "mic/table.hpp"

struct mic_poly {
  mic::IntPoly value;
};

struct mic_certificate {
  mic::NormCertificate cert;
  std::optional<mic::WitnessRecord> witness;
};

struct mic_table {
  std::vector<mic::TableEntry> entries;
};

namespace {

thread_local std::string g_last_error;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Fn>
mic_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const mic::ParseError& e) {
    g_last_error = e.what();
    return MIC_ERR_PARSE;
  } catch (const mic::LimitError& e) {
    g_last_error = e.what();
    return MIC_ERR_LIMIT;
  } catch (const mic::DomainError& e) {
    g_last_error = e.what();
    return MIC_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return MIC_ERR_INVALID_ARGUMENT;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return MIC_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return MIC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "internal error";
    return MIC_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

const char* need_text(const char* s, const char* what) {
  require(s != nullptr, what);
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mic::Rational rational_arg(const char* s, const char* what) { return mic::parse_rational(need_text(s, what)); }

mic::FareyPair pair_arg(const char* lo, const char* hi) {
  return mic::FareyPair::from_endpoints(rational_arg(lo, "lo is null"), rational_arg(hi, "hi is null"));
}

std::vector<mic::Rational> rational_list(const char* const* pts, size_t count) {
  require(count == 0 || pts != nullptr, "points is null");
  std::vector<mic::Rational> out;
  for (size_t i = 0; i < count; ++i) out.push_back(rational_arg(pts[i], "point is null"));
  return out;
}

mic_poly* wrap(mic::IntPoly p) { return new mic_poly{std::move(p)}; }

std::string constant_text(const mic::ConstantValue& v, const std::string& provenance) {
  std::ostringstream out;
  out << "value=" << v.to_string() << "\nr=" << mic::to_string(v.radicand()) << "\nk=" << v.root() << '\n';
  if (!provenance.empty()) out << "provenance=" << provenance << '\n';
  return out.str();
}

mic_status verdict_status(mic::Verdict v) {
  switch (v) {
    case mic::Verdict::CertifiedAtMost: return MIC_OK;
    case mic::Verdict::Refuted: return MIC_REFUTED;
    case mic::Verdict::Inconclusive: return MIC_INCONCLUSIVE;
  }
  return MIC_ERR_INTERNAL;
}

std::string witness_line(const mic::WitnessRecord& rec) {
  std::ostringstream out;
  out << "interval=" << mic::to_string(rec.pair.lo()) << ',' << mic::to_string(rec.pair.hi()) << " degree=" << rec.degree
      << " status=" << mic::verdict_name(rec.certificate.verdict) << " bound=" << mic::to_string(rec.bound)
      << " method=" << mic::method_name(rec.certificate.method);
  if (rec.certificate.refutation_point) out << " refutation_point=" << mic::to_string(*rec.certificate.refutation_point);
  if (rec.norm_equals_bound()) out << " tm_upper=" << rec.tm_upper.to_string();
  return out.str();
}

}  // namespace

extern "C" {

const char* mic_version(void) { return "0.1.0"; }

const char* mic_last_error(void) { return g_last_error.c_str(); }

const char* mic_status_name(mic_status status) {
  switch (status) {
    case MIC_OK: return "ok";
    case MIC_REFUTED: return "refuted";
    case MIC_NOT_FOUND: return "not-found";
    case MIC_INCONCLUSIVE: return "inconclusive";
    case MIC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case MIC_ERR_PARSE: return "parse-error";
    case MIC_ERR_DOMAIN: return "domain-error";
    case MIC_ERR_LIMIT: return "limit";
    case MIC_ERR_IO: return "io-error";
    case MIC_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void mic_free_string(char* s) { std::free(s); }

mic_status mic_poly_parse(const char* text, mic_poly** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = wrap(mic::parse_int_poly(need_text(text, "text is null")));
    return MIC_OK;
  });
}

void mic_poly_free(mic_poly* p) { delete p; }

mic_status mic_poly_format(const mic_poly* p, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup(mic::format_poly(p->value));
    return MIC_OK;
  });
}

mic_status mic_poly_pretty(const mic_poly* p, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup(mic::pretty(p->value));
    return MIC_OK;
  });
}

long mic_poly_degree(const mic_poly* p) {
  if (p == nullptr || p->value.is_zero()) return -1;
  return static_cast<long>(p->value.degree().value());
}

mic_status mic_poly_eval(const mic_poly* p, const char* x, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup(mic::to_string(mic::poly_eval(p->value, rational_arg(x, "x is null"))));
    return MIC_OK;
  });
}

mic_status mic_farey_sequence(long order, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    std::string text;
    for (const auto& q : mic::farey_sequence(order)) text += mic::to_string(q) + '\n';
    *out = dup(text);
    return MIC_OK;
  });
}

mic_status mic_farey_intervals(long order, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    std::string text;
    for (const auto& p : mic::farey_intervals(order)) text += mic::to_string(p.lo()) + ' ' + mic::to_string(p.hi()) + '\n';
    *out = dup(text);
    return MIC_OK;
  });
}

mic_status mic_is_consecutive(const char* lo, const char* hi, int* out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = mic::is_consecutive_pair(rational_arg(lo, "lo is null"), rational_arg(hi, "hi is null")) ? 1 : 0;
    return MIC_OK;
  });
}

mic_status mic_mediant(const char* lo, const char* hi, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = dup(mic::to_string(mic::mediant(pair_arg(lo, hi))));
    return MIC_OK;
  });
}

mic_status mic_construct_pair(const char* lo, const char* hi, unsigned long degree, const char* target_hi,
                              const char* target_lo, mic_poly** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto pair = pair_arg(lo, hi);
    *out = wrap(mic::pair_polynomial(pair, degree, mic::parse_integer(need_text(target_hi, "target is null")),
                                     mic::parse_integer(need_text(target_lo, "target is null"))));
    return MIC_OK;
  });
}

mic_status mic_construct_triple(const char* lo, const char* hi, unsigned long degree, const char* target_hi,
                                const char* target_lo, const char* target_mediant, unsigned long split,
                                mic_poly** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto pair = pair_arg(lo, hi);
    *out = wrap(mic::triple_polynomial(pair, degree, mic::parse_integer(need_text(target_hi, "target is null")),
                                       mic::parse_integer(need_text(target_lo, "target is null")),
                                       mic::parse_integer(need_text(target_mediant, "target is null")), split));
    return MIC_OK;
  });
}

mic_status mic_construct_multi(const char* const* points, size_t count, unsigned long max_degree,
                               unsigned long* degree, mic_poly** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    auto res = mic::multipoint_monic(rational_list(points, count), max_degree);
    if (degree != nullptr) *degree = res.degree;
    *out = wrap(std::move(res.poly));
    return MIC_OK;
  });
}

mic_status mic_admissible_degree(const char* const* points, size_t count, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = dup(mic::to_string(mic::admissible_degree(rational_list(points, count))));
    return MIC_OK;
  });
}

mic_status mic_certify_bound(const mic_poly* p, const char* lo, const char* hi, const char* bound,
                             mic_certificate** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    const mic::Interval iv(rational_arg(lo, "lo is null"), rational_arg(hi, "hi is null"));
    auto cert = mic::decide_sup_bound(p->value, iv, rational_arg(bound, "bound is null"));
    const mic_status s = verdict_status(cert.verdict);
    *out = new mic_certificate{std::move(cert), std::nullopt};
    return s;
  });
}

mic_status mic_certify_conjecture(const mic_poly* p, const char* lo, const char* hi, mic_certificate** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    auto rec = mic::verify_witness(pair_arg(lo, hi), p->value);
    const mic_status s = verdict_status(rec.certificate.verdict);
    *out = new mic_certificate{rec.certificate, std::move(rec)};
    return s;
  });
}

mic_status mic_certify_prefilter(const mic_poly* p, const char* lo, const char* hi, const char* bound, unsigned depth,
                                 mic_certificate** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    const mic::Interval iv(rational_arg(lo, "lo is null"), rational_arg(hi, "hi is null"));
    auto cert = mic::bernstein_prefilter(mic::to_rational(p->value), iv, rational_arg(bound, "bound is null"), depth);
    const mic_status s = verdict_status(cert.verdict);
    *out = new mic_certificate{std::move(cert), std::nullopt};
    return s;
  });
}

mic_status mic_certificate_verdict(const mic_certificate* c) {
  if (c == nullptr) return MIC_ERR_INVALID_ARGUMENT;
  return verdict_status(c->cert.verdict);
}

mic_status mic_certificate_format(const mic_certificate* c, char** out) {
  return guarded([&] {
    require(c != nullptr && out != nullptr, "null argument");
    std::string text = mic::format_certificate(c->cert);
    if (c->witness) {
      text += "degree=" + std::to_string(c->witness->degree) + '\n';
      if (c->witness->norm_equals_bound()) text += "tm_upper=" + c->witness->tm_upper.to_string() + '\n';
    }
    *out = dup(text);
    return MIC_OK;
  });
}

void mic_certificate_free(mic_certificate* c) { delete c; }

mic_status mic_sup_norm_enclosure(const mic_poly* p, const char* lo, const char* hi, const char* tol, char** lower,
                                  char** upper) {
  return guarded([&] {
    require(p != nullptr && lower != nullptr && upper != nullptr, "null argument");
    const mic::Interval iv(rational_arg(lo, "lo is null"), rational_arg(hi, "hi is null"));
    const auto [a, b] = mic::sup_norm_enclosure(mic::to_rational(p->value), iv, rational_arg(tol, "tol is null"));
    *lower = dup(mic::to_string(a));
    *upper = dup(mic::to_string(b));
    return MIC_OK;
  });
}

mic_status mic_search_witness(const char* lo, const char* hi, unsigned long degree, const char* delta, unsigned radius,
                              int full_basis, mic_poly** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    mic::SearchOptions opt;
    if (delta != nullptr) opt.delta = mic::parse_rational(delta);
    opt.radius = radius;
    opt.strategy = full_basis ? mic::SearchStrategy::FullBasis : mic::SearchStrategy::SublatticeCvp;
    auto rec = mic::search_witness(pair_arg(lo, hi), degree, opt);
    *out = nullptr;
    if (!rec) {
      g_last_error = "no certified witness within the search radius";
      return MIC_NOT_FOUND;
    }
    *out = wrap(std::move(rec->poly));
    return MIC_OK;
  });
}

mic_status mic_small_value_polynomial(const char* const* re, const char* const* im, size_t count, const char* epsilon,
                                      unsigned precision, unsigned long max_degree, mic_poly** out) {
  return guarded([&] {
    require(out != nullptr && (count == 0 || re != nullptr), "null argument");
    std::vector<mic::NumericPoint> pts;
    for (size_t i = 0; i < count; ++i) {
      mic::NumericPoint pt{need_text(re[i], "re is null")};
      if (im != nullptr && im[i] != nullptr) pt.im = im[i];
      pts.push_back(std::move(pt));
    }
    auto res = mic::small_value_polynomial(pts, rational_arg(epsilon, "epsilon is null"), precision, max_degree);
    *out = wrap(std::move(res.poly));
    return MIC_OK;
  });
}

mic_status mic_constant_interval(const char* lo, const char* hi, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = nullptr;
    const auto a = mic::SymbolicEndpoint::parse(need_text(lo, "lo is null"));
    const auto b = mic::SymbolicEndpoint::parse(need_text(hi, "hi is null"));
    const auto c = mic::interval_constant(a, b);
    if (!c) {
      *out = dup("value=unknown\n");
      return MIC_NOT_FOUND;
    }
    *out = dup(constant_text(c->value, c->provenance));
    return MIC_OK;
  });
}

mic_status mic_constant_point(const char* point, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto p = mic::SymbolicEndpoint::parse(need_text(point, "point is null"));
    const auto c = mic::symbolic_set_constant({p});
    *out = dup(constant_text(c->value, p.is_rational() ? "reciprocal denominator" : c->provenance));
    return MIC_OK;
  });
}

mic_status mic_constant_set(const char* const* points, size_t count, char** out) {
  return guarded([&] {
    require(out != nullptr && (count == 0 || points != nullptr), "null argument");
    *out = nullptr;
    std::vector<mic::SymbolicEndpoint> pts;
    for (size_t i = 0; i < count; ++i) pts.push_back(mic::SymbolicEndpoint::parse(need_text(points[i], "point is null")));
    const auto c = mic::symbolic_set_constant(pts);
    if (!c) {
      *out = dup("value=unknown\n");
      return MIC_NOT_FOUND;
    }
    *out = dup(constant_text(c->value, c->provenance));
    return MIC_OK;
  });
}

mic_status mic_conjecture_value(const char* lo, const char* hi, const mic_poly* witness, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto pair = pair_arg(lo, hi);
    std::optional<mic::WitnessRecord> rec;
    if (witness != nullptr) rec = mic::verify_witness(pair, witness->value);
    const auto cv = mic::conjecture_value(pair, rec ? &*rec : nullptr);
    std::string text = constant_text(cv.value, "");
    text += std::string("status=") + mic::status_name(cv.status) + "\nbasis=" + cv.basis + '\n';
    *out = dup(text);
    return MIC_OK;
  });
}

mic_status mic_table_load(const char* path, mic_table** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const std::string p = need_text(path, "path is null");
    std::vector<mic::TableEntry> entries;
    try {
      entries = mic::parse_table_file(p);
    } catch (const mic::ParseError&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
    *out = new mic_table{std::move(entries)};
    return MIC_OK;
  });
}

size_t mic_table_size(const mic_table* t) { return t == nullptr ? 0 : t->entries.size(); }

mic_status mic_table_verify(const mic_table* t, unsigned threads, char** report, size_t* failures) {
  return guarded([&] {
    require(t != nullptr && report != nullptr, "null argument");
    const auto outcomes = mic::verify_entries(t->entries, threads);
    std::string text;
    size_t bad = 0;
    for (size_t i = 0; i < outcomes.size(); ++i) {
      if (const auto* rec = std::get_if<mic::WitnessRecord>(&outcomes[i])) {
        if (!rec->norm_equals_bound()) ++bad;
        text += witness_line(*rec) + '\n';
      } else {
        ++bad;
        const auto& e = t->entries[i];
        text += "interval=" + mic::to_string(e.pair.lo()) + ',' + mic::to_string(e.pair.hi()) +
                " status=error reason=" + std::get<std::string>(outcomes[i]) + '\n';
      }
    }
    text += "entries=" + std::to_string(outcomes.size()) + " certified=" + std::to_string(outcomes.size() - bad) +
            " failed=" + std::to_string(bad) + '\n';
    *report = dup(text);
    if (failures != nullptr) *failures = bad;
    return bad == 0 ? MIC_OK : MIC_REFUTED;
  });
}

void mic_table_free(mic_table* t) { delete t; }

}  // extern "C"

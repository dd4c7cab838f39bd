// Command-line front end; talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mic/mic.h"

namespace {

enum Exit { kOk = 0, kNegative = 1, kLimit = 2, kUsage = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolyDeleter {
  void operator()(mic_poly* p) const { mic_poly_free(p); }
};
struct CertDeleter {
  void operator()(mic_certificate* c) const { mic_certificate_free(c); }
};
struct TableDeleter {
  void operator()(mic_table* t) const { mic_table_free(t); }
};
using PolyPtr = std::unique_ptr<mic_poly, PolyDeleter>;
using CertPtr = std::unique_ptr<mic_certificate, CertDeleter>;
using TablePtr = std::unique_ptr<mic_table, TableDeleter>;

int exit_code(mic_status s) {
  switch (s) {
    case MIC_OK: return kOk;
    case MIC_REFUTED:
    case MIC_NOT_FOUND: return kNegative;
    case MIC_INCONCLUSIVE:
    case MIC_ERR_LIMIT:
    case MIC_ERR_INTERNAL: return kLimit;
    default: return kUsage;
  }
}

// Prints the error for failing statuses and returns the exit code.
int report(mic_status s) {
  if (s < 0) std::cerr << "error: " << mic_last_error() << '\n';
  return exit_code(s);
}

// Takes ownership of a library string and writes it to stdout.
void emit(char* s) {
  if (s == nullptr) return;
  std::cout << s;
  mic_free_string(s);
}

void emit_poly(const mic_poly* p) {
  char* text = nullptr;
  if (mic_poly_format(p, &text) == MIC_OK) {
    std::cout << "degree=" << mic_poly_degree(p) << '\n' << text << '\n';
    mic_free_string(text);
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

// First non-comment, non-blank line of a polynomial file.
std::string read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    return line.substr(b);
  }
  throw UsageError(path + " contains no polynomial");
}

PolyPtr load_poly(const std::string& path) {
  const std::string text = read_poly_file(path);
  mic_poly* p = nullptr;
  const mic_status s = mic_poly_parse(text.c_str(), &p);
  if (s != MIC_OK) throw UsageError(path + ": " + mic_last_error());
  return PolyPtr(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monic integer Chebyshev witnesses on Farey intervals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mic_version());

  // farey
  auto* farey = app.add_subcommand("farey", "List the Farey sequence of an order");
  long order = 0;
  bool pairs = false;
  farey->add_option("--order", order, "Largest denominator")->required()->check(CLI::PositiveNumber);
  farey->add_flag("--pairs", pairs, "List consecutive pairs instead of fractions");

  // construct
  auto* construct = app.add_subcommand("construct", "Monic polynomials with prescribed values");
  construct->require_subcommand(1);
  std::string lo, hi;
  unsigned long degree = 0;
  std::string targets;
  unsigned long split = 0;
  auto* cpair = construct->add_subcommand("pair", "Prescribe values at both ends of a Farey pair");
  cpair->add_option("lo", lo, "Lower endpoint a2/b2")->required();
  cpair->add_option("hi", hi, "Upper endpoint a1/b1")->required();
  cpair->add_option("--degree", degree, "Degree n")->required();
  cpair->add_option("--targets", targets, "A1,A2 with f(a_i/b_i) = A_i/b_i^n (default 1,1)");
  auto* ctriple = construct->add_subcommand("triple", "Also prescribe the value at the mediant");
  ctriple->add_option("lo", lo, "Lower endpoint a2/b2")->required();
  ctriple->add_option("hi", hi, "Upper endpoint a1/b1")->required();
  ctriple->add_option("--degree", degree, "Degree n")->required();
  ctriple->add_option("--targets", targets, "A1,A2,A3 (default 1,1,1)");
  ctriple->add_option("--split", split, "Exponent split j, 1 <= j <= n-2")->required();
  std::string multi_points;
  unsigned long max_degree = 0;
  auto* cmulti = construct->add_subcommand("multi", "F(a_i/b_i) = 1/b_i^n at every point");
  cmulti->add_option("points", multi_points, "Comma-separated fractions")->required();
  cmulti->add_option("--max-degree", max_degree, "Cap on n")->required();

  // certify
  auto* certify = app.add_subcommand("certify", "Decide a sup-norm bound on an interval");
  std::string poly_file, bound;
  std::vector<std::string> interval;
  bool conjecture = false;
  certify->add_option("--poly", poly_file, "Polynomial file")->required();
  certify->add_option("--interval", interval, "LO HI")->required()->expected(2);
  auto* bound_opt = certify->add_option("--bound", bound, "Rational bound B");
  auto* conj_opt = certify->add_flag("--conjecture", conjecture, "Use max(1/b1,1/b2)^deg");
  bound_opt->excludes(conj_opt);

  // search
  auto* search = app.add_subcommand("search", "Lattice search for a witness");
  std::string delta = "3/4";
  unsigned radius = 1;
  bool full_basis = false;
  search->add_option("--interval", interval, "LO HI")->required()->expected(2);
  search->add_option("--degree", degree, "Degree n")->required();
  search->add_option("--delta", delta, "LLL parameter in (1/4, 1)");
  search->add_option("--radius", radius, "Offset box radius");
  search->add_flag("--full-basis", full_basis, "Reduce the full basis instead of the endpoint-vanishing part");

  // constant
  auto* constant = app.add_subcommand("constant", "Known monic integer Chebyshev constants");
  std::vector<std::string> const_interval, farey_interval;
  std::string point, set;
  std::string witness_file;
  auto* ci = constant->add_option("--interval", const_interval, "LO HI (sqrt(N) allowed)")->expected(2);
  auto* cp = constant->add_option("--point", point, "A single point");
  auto* cs = constant->add_option("--set", set, "Comma-separated points");
  auto* cf = constant->add_option("--farey", farey_interval, "LO HI of a Farey pair: conjectured value")->expected(2);
  constant->add_option("--witness", witness_file, "Witness polynomial file for --farey")->needs(cf);
  ci->excludes(cp, cs, cf);
  cp->excludes(cs, cf);
  cs->excludes(cf);

  // small-values
  auto* small = app.add_subcommand("small-values", "Monic F small at numeric points");
  std::vector<std::string> numeric_points;
  std::string epsilon;
  unsigned precision = 256;
  unsigned long small_cap = 64;
  small->add_option("--point", numeric_points, "RE or RE,IM; repeat per point")->required();
  small->add_option("--epsilon", epsilon, "Target bound in (0, 1)")->required();
  small->add_option("--precision", precision, "Working precision in bits");
  small->add_option("--max-degree", small_cap, "Largest degree tried");

  // verify-table
  auto* table = app.add_subcommand("verify-table", "Certify every record of a witness table");
  std::string table_file;
  unsigned threads = 0;
  table->add_option("file", table_file, "Table file")->required();
  table->add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (farey->parsed()) {
      char* out = nullptr;
      const mic_status s = pairs ? mic_farey_intervals(order, &out) : mic_farey_sequence(order, &out);
      emit(out);
      return report(s);
    }

    if (cpair->parsed() || ctriple->parsed()) {
      const bool triple = ctriple->parsed();
      std::vector<std::string> t = targets.empty() ? std::vector<std::string>(triple ? 3 : 2, "1") : split_list(targets);
      if (t.size() != (triple ? 3U : 2U)) throw UsageError("--targets needs " + std::string(triple ? "3" : "2") + " values");
      mic_poly* p = nullptr;
      const mic_status s = triple ? mic_construct_triple(lo.c_str(), hi.c_str(), degree, t[0].c_str(), t[1].c_str(),
                                                         t[2].c_str(), split, &p)
                                  : mic_construct_pair(lo.c_str(), hi.c_str(), degree, t[0].c_str(), t[1].c_str(), &p);
      PolyPtr owned(p);
      if (s == MIC_OK) emit_poly(p);
      return report(s);
    }

    if (cmulti->parsed()) {
      const auto pts = split_list(multi_points);
      const auto cpts = c_strings(pts);
      mic_poly* p = nullptr;
      unsigned long n = 0;
      const mic_status s = mic_construct_multi(cpts.data(), cpts.size(), max_degree, &n, &p);
      PolyPtr owned(p);
      if (s == MIC_OK) emit_poly(p);
      return report(s);
    }

    if (certify->parsed()) {
      if (bound.empty() == !conjecture) throw UsageError("certify needs exactly one of --bound or --conjecture");
      PolyPtr p = load_poly(poly_file);
      mic_certificate* c = nullptr;
      const mic_status s = conjecture ? mic_certify_conjecture(p.get(), interval[0].c_str(), interval[1].c_str(), &c)
                                      : mic_certify_bound(p.get(), interval[0].c_str(), interval[1].c_str(), bound.c_str(), &c);
      CertPtr owned(c);
      if (c != nullptr) {
        char* text = nullptr;
        if (mic_certificate_format(c, &text) == MIC_OK) emit(text);
      }
      return report(s);
    }

    if (search->parsed()) {
      mic_poly* p = nullptr;
      const mic_status s = mic_search_witness(interval[0].c_str(), interval[1].c_str(), degree, delta.c_str(), radius,
                                              full_basis ? 1 : 0, &p);
      PolyPtr owned(p);
      if (s != MIC_OK) {
        if (s == MIC_NOT_FOUND) std::cout << "status=not-found\n";
        return report(s);
      }
      emit_poly(p);
      mic_certificate* c = nullptr;
      mic_certify_conjecture(p, interval[0].c_str(), interval[1].c_str(), &c);
      CertPtr cert(c);
      char* text = nullptr;
      if (c != nullptr && mic_certificate_format(c, &text) == MIC_OK) emit(text);
      return kOk;
    }

    if (constant->parsed()) {
      char* out = nullptr;
      mic_status s;
      if (!const_interval.empty()) {
        s = mic_constant_interval(const_interval[0].c_str(), const_interval[1].c_str(), &out);
      } else if (!point.empty()) {
        s = mic_constant_point(point.c_str(), &out);
      } else if (!set.empty()) {
        const auto pts = split_list(set);
        const auto cpts = c_strings(pts);
        s = mic_constant_set(cpts.data(), cpts.size(), &out);
      } else if (!farey_interval.empty()) {
        PolyPtr w;
        if (!witness_file.empty()) w = load_poly(witness_file);
        s = mic_conjecture_value(farey_interval[0].c_str(), farey_interval[1].c_str(), w.get(), &out);
      } else {
        throw UsageError("constant needs one of --interval, --point, --set or --farey");
      }
      emit(out);
      return report(s);
    }

    if (small->parsed()) {
      std::vector<std::string> re, im;
      for (const auto& pt : numeric_points) {
        const auto parts = split_list(pt);
        if (parts.empty() || parts.size() > 2) throw UsageError("--point takes RE or RE,IM");
        re.push_back(parts[0]);
        im.push_back(parts.size() == 2 ? parts[1] : "0");
      }
      const auto cre = c_strings(re);
      const auto cim = c_strings(im);
      mic_poly* p = nullptr;
      const mic_status s = mic_small_value_polynomial(cre.data(), cim.data(), cre.size(), epsilon.c_str(), precision,
                                                      small_cap, &p);
      PolyPtr owned(p);
      if (s == MIC_OK) emit_poly(p);
      return report(s);
    }

    if (table->parsed()) {
      mic_table* t = nullptr;
      mic_status s = mic_table_load(table_file.c_str(), &t);
      TablePtr owned(t);
      if (s != MIC_OK) return report(s);
      char* out = nullptr;
      size_t failures = 0;
      s = mic_table_verify(t, threads, &out, &failures);
      emit(out);
      return report(s);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

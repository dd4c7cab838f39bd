#include <doctest.h>

#include <cstring>
#include <string>

#include "mic/mic.h"

namespace {
// Takes ownership of a library string.
std::string take(char* s) {
  std::string r = s ? s : "";
  mic_free_string(s);
  return r;
}
struct Poly {
  mic_poly* p = nullptr;
  ~Poly() { mic_poly_free(p); }
};
}  // namespace

TEST_CASE("polynomial handles") {
  Poly f;
  REQUIRE(mic_poly_parse("poly 1 -3 1", &f.p) == MIC_OK);
  CHECK(mic_poly_degree(f.p) == 2);
  char* s = nullptr;
  REQUIRE(mic_poly_eval(f.p, "1/3", &s) == MIC_OK);
  CHECK(take(s) == "1/9");
  REQUIRE(mic_poly_pretty(f.p, &s) == MIC_OK);
  CHECK(take(s) == "x^2 - 3*x + 1");
  REQUIRE(mic_poly_format(f.p, &s) == MIC_OK);
  CHECK(take(s) == "poly 1 -3 1");

  Poly bad;
  CHECK(mic_poly_parse("1 2 3", &bad.p) == MIC_ERR_PARSE);
  CHECK(bad.p == nullptr);
  CHECK(std::strlen(mic_last_error()) > 0);
  CHECK(mic_poly_parse(nullptr, &bad.p) == MIC_ERR_INVALID_ARGUMENT);
  CHECK(mic_poly_eval(f.p, "1/0", &s) == MIC_ERR_PARSE);
  Poly zero;
  REQUIRE(mic_poly_parse("poly 0", &zero.p) == MIC_OK);
  CHECK(mic_poly_degree(zero.p) < 0);
}

TEST_CASE("Farey and construction calls") {
  char* s = nullptr;
  REQUIRE(mic_farey_sequence(3, &s) == MIC_OK);
  CHECK(take(s) == "0\n1/3\n1/2\n2/3\n1\n");
  CHECK(mic_farey_sequence(0, &s) == MIC_ERR_DOMAIN);
  int yes = 0;
  REQUIRE(mic_is_consecutive("1/3", "2/5", &yes) == MIC_OK);
  CHECK(yes == 1);
  REQUIRE(mic_mediant("1/3", "2/5", &s) == MIC_OK);
  CHECK(take(s) == "3/8");

  Poly f;
  REQUIRE(mic_construct_pair("1/3", "2/5", 4, "1", "1", &f.p) == MIC_OK);
  REQUIRE(mic_poly_format(f.p, &s) == MIC_OK);
  CHECK(take(s) == "poly 3 -27 81 -81 1");
  Poly g;
  CHECK(mic_construct_pair("1/3", "2/5", 4, "2", "1", &g.p) == MIC_ERR_DOMAIN);

  const char* pts[] = {"1/2", "1/3"};
  unsigned long deg = 0;
  Poly m;
  REQUIRE(mic_construct_multi(pts, 2, 64, &deg, &m.p) == MIC_OK);
  CHECK(deg == 2);
  REQUIRE(mic_admissible_degree(pts, 2, &s) == MIC_OK);
  CHECK(take(s) == "2");
}

TEST_CASE("certification calls") {
  Poly f;
  REQUIRE(mic_poly_parse("poly 1 -3 1", &f.p) == MIC_OK);
  mic_certificate* c = nullptr;
  CHECK(mic_certify_bound(f.p, "1/3", "2/5", "1/10", &c) == MIC_REFUTED);
  CHECK(mic_certificate_verdict(c) == MIC_REFUTED);
  char* s = nullptr;
  REQUIRE(mic_certificate_format(c, &s) == MIC_OK);
  CHECK(take(s).find("refutation_point=1/3") != std::string::npos);
  mic_certificate_free(c);

  REQUIRE(mic_certify_conjecture(f.p, "1/3", "2/5", &c) == MIC_OK);
  REQUIRE(mic_certificate_format(c, &s) == MIC_OK);
  const std::string text = take(s);
  CHECK(text.find("status=certified") != std::string::npos);
  CHECK(text.find("bound=1/9") != std::string::npos);
  mic_certificate_free(c);

  Poly quartic;
  REQUIRE(mic_poly_parse("poly 0 0 -8 0 1", &quartic.p) == MIC_OK);
  CHECK(mic_certify_prefilter(quartic.p, "-3", "3", "16", 0, &c) == MIC_INCONCLUSIVE);
  mic_certificate_free(c);
  CHECK(mic_certify_bound(f.p, "2/5", "1/3", "1", &c) == MIC_ERR_DOMAIN);

  char *lo = nullptr, *hi = nullptr;
  REQUIRE(mic_sup_norm_enclosure(f.p, "1/3", "2/5", "1/1000", &lo, &hi) == MIC_OK);
  CHECK(take(lo) == "1/9");
  CHECK(take(hi) == "1/9");
}

TEST_CASE("search, constants and tables") {
  Poly w;
  REQUIRE(mic_search_witness("1/3", "2/5", 4, "3/4", 1, 0, &w.p) == MIC_OK);
  CHECK(mic_poly_degree(w.p) == 4);
  Poly none;
  CHECK(mic_search_witness("1/16", "1/15", 4, "3/4", 0, 0, &none.p) == MIC_NOT_FOUND);

  char* s = nullptr;
  REQUIRE(mic_constant_interval("-1", "1", &s) == MIC_OK);
  const std::string c = take(s);
  CHECK(c.find("value=(1/2)^(1/2)") != std::string::npos);
  CHECK(c.find("r=1/2") != std::string::npos);
  CHECK(c.find("k=2") != std::string::npos);
  CHECK(mic_constant_interval("1/3", "2/5", &s) == MIC_NOT_FOUND);
  CHECK(take(s).find("value=unknown") != std::string::npos);
  REQUIRE(mic_conjecture_value("1/3", "2/5", w.p, &s) == MIC_OK);
  CHECK(take(s).find("status=PROVEN-EQUAL") != std::string::npos);
  REQUIRE(mic_conjecture_value("1/3", "2/5", nullptr, &s) == MIC_OK);
  CHECK(take(s).find("status=CONJECTURED") != std::string::npos);

  mic_table* t = nullptr;
  REQUIRE(mic_table_load(MIC_TABLE_PATH, &t) == MIC_OK);
  CHECK(mic_table_size(t) == 73);
  std::size_t failures = 99;
  REQUIRE(mic_table_verify(t, 0, &s, &failures) == MIC_OK);
  CHECK(failures == 0);
  CHECK(take(s).find("entries=73 certified=73 failed=0") != std::string::npos);
  mic_table_free(t);
  CHECK(mic_table_load("/nonexistent/x", &t) == MIC_ERR_IO);
  CHECK(std::string(mic_status_name(MIC_ERR_LIMIT)).size() > 0);
}

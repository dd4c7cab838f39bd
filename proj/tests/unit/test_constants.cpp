#include <doctest.h>
#include <mpfr.h>

#include "mic/constants.hpp"
#include "oracles.hpp"

using namespace mic;

namespace {
Rational q(long a, long b = 1) { return make_rational(BigInt(a), BigInt(b)); }
SymbolicEndpoint sym(const char* s) { return SymbolicEndpoint::parse(s); }
std::optional<CatalogConstant> iv(const char* lo, const char* hi) { return interval_constant(sym(lo), sym(hi)); }
bool value_is(const std::optional<CatalogConstant>& c, const Rational& r, unsigned long k) {
  return c && c->value.radicand() == r && c->value.root() == k;
}

// log(r)/k at 256 bits.
double log_value(const ConstantValue& v, mpfr_t out) {
  mpfr_t r;
  mpfr_init2(r, 256);
  mpfr_set_q(r, v.radicand().get_mpq_t(), MPFR_RNDN);
  mpfr_log(out, r, MPFR_RNDN);
  mpfr_div_ui(out, out, v.root(), MPFR_RNDN);
  mpfr_clear(r);
  return mpfr_get_d(out, MPFR_RNDN);
}
}  // namespace

TEST_CASE("constant values are canonical") {
  CHECK(ConstantValue(q(1, 4), 2) == ConstantValue(q(1, 2)));
  CHECK(ConstantValue(q(1, 8), 6) == ConstantValue(q(1, 2), 2));
  CHECK(ConstantValue(q(1, 2), 2).to_string() == "(1/2)^(1/2)");
  CHECK(ConstantValue(q(1, 3)).to_string() == "1/3");
  CHECK(ConstantValue(q(0), 5) == ConstantValue(q(0)));
  CHECK_THROWS_AS(ConstantValue(q(-1)), DomainError);
  CHECK_THROWS_AS(ConstantValue(q(1), 0), DomainError);
  Rational out;
  CHECK(exact_root(q(27, 8), 3, out));
  CHECK(out == q(3, 2));
  CHECK_FALSE(exact_root(q(2), 2, out));
}

TEST_CASE("ordering agrees with high-precision numerics") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(0, 60), den(1, 60), root(1, 6);
  mpfr_t a, b;
  mpfr_init2(a, 256);
  mpfr_init2(b, 256);
  for (int t = 0; t < 1000; ++t) {
    const ConstantValue x(q(num(rng), den(rng)), root(rng)), y(q(num(rng), den(rng)), root(rng));
    const auto c = x <=> y;
    if (x.radicand() == 0 || y.radicand() == 0) {
      CHECK((c == 0) == (x.radicand() == 0 && y.radicand() == 0));
      continue;
    }
    log_value(x, a);
    log_value(y, b);
    const int numeric = mpfr_cmp(a, b);
    if (c == 0) {
      CHECK(x == y);
      mpfr_sub(a, a, b, MPFR_RNDN);
      const bool tiny = mpfr_zero_p(a) != 0 || mpfr_get_exp(a) < -200;
      CHECK(tiny);
    } else {
      CHECK((c < 0) == (numeric < 0));
    }
  }
  mpfr_clear(a);
  mpfr_clear(b);
}

TEST_CASE("point and finite-set constants") {
  CHECK(point_constant(q(3, 7)) == ConstantValue(q(1, 7)));
  CHECK(point_constant(q(5)) == ConstantValue(q(0)));
  CHECK(point_constant(q(1, 2)) == ConstantValue(q(1, 2)));
  CHECK(finite_set_constant({q(1, 2), q(2, 3)}) == ConstantValue(q(1, 2)));
  CHECK(finite_set_constant({q(2, 5)}) == ConstantValue(q(1, 5)));
  CHECK(finite_set_constant({q(1, 3), q(2, 3), q(1, 7)}) == ConstantValue(q(1, 3)));
  CHECK_THROWS_AS(finite_set_constant({q(1, 3), q(2)}), DomainError);
  CHECK(finite_set_constant({q(1, 3), q(2)}, true) == ConstantValue(q(1, 3)));
}

TEST_CASE("sets with surd points") {
  const auto pair = symbolic_set_constant({sym("-1/sqrt(2)"), sym("1/sqrt(2)")});
  CHECK(value_is(pair, q(1, 2), 2));
  CHECK(value_is(symbolic_set_constant({sym("sqrt(3)")}), q(0), 1));
  CHECK(value_is(symbolic_set_constant({sym("1/3"), sym("3/4")}), q(1, 3), 1));
}

TEST_CASE("interval catalog") {
  CHECK(value_is(iv("0", "1/2"), q(1, 2), 1));
  CHECK(value_is(iv("-1", "1"), q(1, 2), 2));
  CHECK(value_is(iv("0", "4"), q(1), 1));
  CHECK(value_is(iv("0", "1"), q(1, 2), 1));
  CHECK(value_is(iv("3", "5"), q(1, 2), 2));
  CHECK(value_is(iv("(1-sqrt(2))/2", "(1+sqrt(2))/2"), q(1, 2), 1));
  CHECK(value_is(iv("-1/sqrt(3)", "1/sqrt(3)"), q(1, 3), 2));
  // Length 4 + 2*sqrt(2): its capacity is not of the form r^(1/k).
  CHECK_FALSE(iv("-1", "3+2*sqrt(2)").has_value());
  CHECK(value_is(iv("0", "sqrt(20)"), q(20, 16), 2));
  CHECK_FALSE(iv("1/3", "2/5").has_value());
  CHECK_FALSE(iv("0", "3").has_value());
  CHECK_THROWS_AS(iv("1", "1"), DomainError);
  CHECK_THROWS_AS(iv("2", "1"), DomainError);
  CHECK_THROWS_AS(iv("sqrt(2)", "sqrt(3)"), DomainError);
  for (long n = 2; n <= 30; ++n) {
    CHECK(value_is(interval_constant(q(0), q(1, n)), q(1, n), 1));
    CHECK(value_is(interval_constant(q(n - 1, n), q(1)), q(1, n), 1));
    CHECK(value_is(interval_constant(q(-1, n), q(1, n)), q(1, n), 1));
    CHECK(value_is(interval_constant(q(n), q(2 * n + 1, 2)), q(1, 2), 1));
    CHECK(value_is(interval_constant(q(2 * n - 1, 2), q(n)), q(1, 2), 1));
    CHECK(value_is(interval_constant(q(n), q(n + 1)), q(1, 2), 1));
    CHECK(value_is(interval_constant(q(n), q(n + 2)), q(1, 2), 2));
    const SymbolicEndpoint r(0, q(1, n), BigInt(n));  // 1/sqrt(n)
    CHECK(interval_constant(-r, r)->value == ConstantValue(q(1, n), 2));
  }
}

TEST_CASE("symbolic endpoints") {
  const auto x = sym("1/2-1/2*sqrt(2)");
  CHECK(x.to_string() == "1/2-1/2*sqrt(2)");
  CHECK(x.sign() < 0);
  CHECK(sym("sqrt(8)") == SymbolicEndpoint(0, 2, BigInt(2)));
  CHECK(sym("sqrt(4)") == SymbolicEndpoint(q(2)));
  CHECK(sym("(1+sqrt(2))*(1-sqrt(2))") == SymbolicEndpoint(q(-1)));
  CHECK(sym("1/sqrt(2)") < sym("3/4"));
  CHECK(sym("1/sqrt(2)") > sym("7/10"));
  CHECK_THROWS_AS(sym("sqrt(-2)"), ParseError);
  CHECK_THROWS_AS(sym("1+"), ParseError);
  CHECK_THROWS_AS(sym("sqrt(2)+sqrt(3)"), ParseError);
  CHECK_THROWS_AS(sym("1/0"), ParseError);
}

TEST_CASE("catalog values grow under inclusion and dominate points") {
  std::vector<Rational> pts;
  for (long b = 1; b <= 10; ++b)
    for (long a = -b; a <= 5 * b; ++a) pts.push_back(q(a, b));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  struct Known {
    Rational lo, hi;
    ConstantValue v;
  };
  std::vector<Known> known;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (auto c = interval_constant(pts[i], pts[j])) known.push_back({pts[i], pts[j], c->value});
  CHECK(known.size() > 50);
  for (const auto& a : known)
    for (const auto& b : known)
      if (b.lo <= a.lo && a.hi <= b.hi) CHECK(a.v <= b.v);
  for (const auto& k : known)
    for (long b = 1; b <= 20; ++b) {
      const Rational lo_b = k.lo * b;
      BigInt a0;
      mpz_cdiv_q(a0.get_mpz_t(), lo_b.get_num_mpz_t(), lo_b.get_den_mpz_t());
      for (BigInt a = a0; Rational(a, b) <= k.hi; ++a) CHECK(point_constant(make_rational(a, b)) <= k.v);
    }
}

TEST_CASE("transforms") {
  CHECK(transform_constant(ConstantValue(q(1, 4)), SetMap::Logistic) == ConstantValue(q(1, 2)));
  CHECK(transform_constant(ConstantValue(q(1, 2)), SetMap::Square) == ConstantValue(q(1, 2), 2));
  CHECK(transform_constant(ConstantValue(q(2, 7), 3), SetMap::Shift) == ConstantValue(q(2, 7), 3));
  CHECK(transform_constant(ConstantValue(q(2, 7), 3), SetMap::Negate) == ConstantValue(q(2, 7), 3));
  const auto twice = transform_constant(transform_constant(ConstantValue(q(1, 3), 5), SetMap::Square), SetMap::Square);
  CHECK(twice == ConstantValue(q(1, 3), 20));
  CHECK(transform_constant(transform_constant(ConstantValue(q(1, 16)), SetMap::Square), SetMap::Square) ==
        ConstantValue(q(1, 2)));
  // The pullback of [0,1/4] under z(1-z) is [0,1]; of [0,1] under z^2 is [-1,1].
  CHECK(transform_constant(interval_constant(q(0), q(1, 4))->value, SetMap::Logistic) ==
        interval_constant(q(0), q(1))->value);
  CHECK(transform_constant(interval_constant(q(0), q(1))->value, SetMap::Square) ==
        interval_constant(q(-1), q(1))->value);
}

TEST_CASE("conjectured Farey values") {
  const auto a = conjecture_value(FareyPair::from_endpoints(q(1, 3), q(2, 5)));
  CHECK(a.value == ConstantValue(q(1, 3)));
  CHECK(a.status == ConjectureStatus::Conjectured);
  CHECK(std::string(status_name(a.status)) == "CONJECTURED");
  for (long n = 2; n <= 12; ++n) {
    const auto z = conjecture_value(FareyPair::from_endpoints(q(0), q(1, n)));
    CHECK(z.value == ConstantValue(q(1, n)));
    CHECK(z.status == ConjectureStatus::ProvenEqual);
  }
  CHECK(conjecture_value(FareyPair::from_endpoints(q(4, 9), q(5, 11))).value == ConstantValue(q(1, 9)));

  const auto pr = FareyPair::from_endpoints(q(1, 3), q(2, 5));
  const auto w = verify_witness(pr, IntPoly{BigInt(1), BigInt(-3), BigInt(1)});
  const auto b = conjecture_value(pr, &w);
  CHECK(b.status == ConjectureStatus::ProvenEqual);
  CHECK(std::string(status_name(b.status)) == "PROVEN-EQUAL");
  // A failed witness never upgrades the status.
  const auto bad = verify_witness(pr, IntPoly{BigInt(0), BigInt(0), BigInt(1)});
  CHECK(conjecture_value(pr, &bad).status == ConjectureStatus::Conjectured);
  // Nor does a witness for another pair.
  const auto other = FareyPair::from_endpoints(q(1, 4), q(2, 7));
  CHECK(conjecture_value(other, &w).status == ConjectureStatus::Conjectured);
}

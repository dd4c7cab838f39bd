#include <doctest.h>

#include "mic/construct.hpp"
#include "oracles.hpp"

using namespace mic;

namespace {
Rational q(long a, long b = 1) { return make_rational(BigInt(a), BigInt(b)); }
IntPoly ip(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}
BigInt ipow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}
BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}
// Smallest n in [2, cap] with a_i^n = 1 mod b_i at both endpoints, by brute force.
std::optional<unsigned long> first_admissible(const FareyPair& p, unsigned long cap) {
  for (unsigned long n = 2; n <= cap; ++n)
    if (mod(ipow(p.a1(), n) - 1, p.b1()) == 0 && mod(ipow(p.a2(), n) - 1, p.b2()) == 0) return n;
  return std::nullopt;
}
std::vector<FareyPair> pairs_up_to(long order) { return farey_intervals(order); }
}  // namespace

TEST_CASE("pair polynomial examples") {
  const auto pr = FareyPair::from_endpoints(q(1, 3), q(2, 5));
  const IntPoly f = pair_polynomial(pr, 4, BigInt(1), BigInt(1));
  CHECK(f == ip({3, -27, 81, -81, 1}));
  CHECK(poly_eval(f, q(2, 5)) == q(1, 625));
  CHECK(poly_eval(f, q(1, 3)) == q(1, 81));

  const IntPoly g = pair_polynomial(FareyPair::from_endpoints(q(0), q(1, 2)), 2, BigInt(1), BigInt(0));
  CHECK(g == ip({0, 0, 1}));
  CHECK_THROWS_AS(pair_polynomial(pr, 4, BigInt(2), BigInt(1)), DomainError);
  CHECK_THROWS_AS(pair_polynomial(pr, 1, BigInt(1), BigInt(1)), DomainError);
}

TEST_CASE("pair polynomial on random Farey pairs") {
  std::mt19937_64 rng(2024);
  const auto all = pairs_up_to(50);
  int tested = 0;
  for (int t = 0; t < 4000 && tested < 100; ++t) {
    const auto& pr = all[rng() % all.size()];
    const auto n = first_admissible(pr, 12);
    if (!n) continue;
    ++tested;
    // Residue-compatible targets A_i = a_i^n + s_i b_i.
    std::uniform_int_distribution<long> s(-3, 3);
    const BigInt t1 = ipow(pr.a1(), *n) + s(rng) * pr.b1();
    const BigInt t2 = ipow(pr.a2(), *n) + s(rng) * pr.b2();
    const IntPoly f = pair_polynomial(pr, *n, t1, t2);
    CHECK(f.is_monic());
    CHECK(f.degree().value() == *n);
    CHECK(oracle::eval(f.coeffs(), pr.hi()) == Rational(t1) / Rational(ipow(pr.b1(), *n)));
    CHECK(oracle::eval(f.coeffs(), pr.lo()) == Rational(t2) / Rational(ipow(pr.b2(), *n)));
  }
  CHECK(tested == 100);
}

TEST_CASE("triple polynomial") {
  const auto unit = FareyPair::from_endpoints(q(0), q(1));
  const IntPoly c = triple_polynomial(unit, 3, BigInt(0), BigInt(0), BigInt(1), 1);
  CHECK(c.is_monic());
  CHECK(c.degree().value() == 3);
  CHECK(poly_eval(c, q(1, 2)) == q(1, 8));
  CHECK(poly_eval(c, q(0)) == 0);
  CHECK(poly_eval(c, q(1)) == 0);

  const auto pr = FareyPair::from_endpoints(q(1, 3), q(2, 5));
  CHECK_THROWS_AS(triple_polynomial(pr, 4, BigInt(1), BigInt(1), BigInt(1), 3), DomainError);

  // The correction vanishes at both endpoints; the mediant takes its target.
  for (const auto& p : pairs_up_to(12)) {
    const auto n = first_admissible(p, 12);
    if (!n || *n < 3) continue;
    const Rational m = mediant(p);
    const BigInt t3 = ipow(m.get_num(), *n) + m.get_den();
    for (unsigned long j = 1; j + 2 <= *n; ++j) {
      const IntPoly tri = triple_polynomial(p, *n, BigInt(1), BigInt(1), t3, j);
      const IntPoly two = pair_polynomial(p, *n, BigInt(1), BigInt(1));
      CHECK(poly_eval(tri - two, p.lo()) == 0);
      CHECK(poly_eval(tri - two, p.hi()) == 0);
      CHECK(poly_eval(tri, m) == Rational(t3) / Rational(ipow(m.get_den(), *n)));
      CHECK(tri.is_monic());
    }
  }
}

TEST_CASE("admissible degree examples") {
  CHECK(admissible_degree({q(2, 3)}) == 2);
  CHECK(admissible_degree({q(1, 2), q(1, 3)}) == 2);
  CHECK(admissible_degree({q(1, 2)}) == 1);
  CHECK(multiplicative_order(BigInt(2), BigInt(5)) == 4);
  CHECK(multiplicative_order(BigInt(3), BigInt(7)) == 6);
  CHECK(multiplicative_order(BigInt(10), BigInt(1)) == 1);
  CHECK_THROWS_AS(multiplicative_order(BigInt(2), BigInt(4)), DomainError);
  CHECK_THROWS_AS(admissible_degree({q(2)}), DomainError);
  CHECK_THROWS_AS(admissible_degree({q(1, 2), q(1, 2)}), DomainError);
  CHECK_THROWS_AS(admissible_degree({}), DomainError);
}

TEST_CASE("multiplicative order against brute force") {
  for (long m = 2; m <= 60; ++m)
    for (long a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      long k = 1;
      long x = a % m;
      while (x != 1) {
        x = x * a % m;
        ++k;
      }
      CHECK(multiplicative_order(BigInt(a), BigInt(m)) == k);
    }
}

TEST_CASE("multipoint examples") {
  const auto r = multipoint_monic({q(2, 3)}, 64);
  CHECK(r.degree == 2);
  CHECK(r.poly == ip({1, -2, 1}));
  CHECK(poly_eval(r.poly, q(2, 3)) == q(1, 9));

  const auto two = multipoint_monic({q(1, 2), q(1, 3)}, 64);
  CHECK(two.degree == 2);
  CHECK(two.poly == ip({0, 0, 1}));

  const auto one = multipoint_monic({q(1, 2)}, 64);
  CHECK(one.degree == 1);
  CHECK(one.poly == ip({0, 1}));
}

TEST_CASE("construction state invariants") {
  const std::vector<Rational> pts{q(1, 2), q(2, 3), q(3, 4)};
  const auto st = construction_state(pts);
  REQUIRE(st.points.size() == 3);
  BigInt lcm = 1;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    BigInt e = 1;
    for (std::size_t i = 0; i < j; ++i)
      e *= pts[j].get_num() * pts[i].get_den() - pts[i].get_num() * pts[j].get_den();
    CHECK(st.e[j] == e);
    if (j > 0) {
      const BigInt ae = abs(e);
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), ae.get_mpz_t());
    }
  }
  CHECK(st.d == lcm);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const BigInt b = pts[j].get_den();
    CHECK(st.d1[j] * st.d2[j] == st.d);
    CHECK(gcd(st.d2[j], b) == 1);
    CHECK(st.e1[j] * st.e2[j] == abs(st.e[j]));
    CHECK(gcd(st.e2[j], b) == 1);
    // d1, e1 are supported on primes of b: they divide a power of b.
    const BigInt big = ipow(b, 64);
    CHECK(mod(big, st.d1[j]) == 0);
    CHECK(mod(big, st.e1[j]) == 0);
    CHECK(pts[j].get_num() * st.inverses[j].l - b * st.inverses[j].f == 1);
  }
  // p^alpha | d implies alpha < m.
  for (unsigned long p = 2; p < 100; ++p) {
    if (!mpz_probab_prime_p(BigInt(p).get_mpz_t(), 25)) continue;
    CHECK_FALSE(mod(st.d, ipow(BigInt(p), st.m)) == 0);
  }
  CHECK(st.degree >= BigInt(pts.size() * st.m));
}

TEST_CASE("multipoint on all small point sets") {
  std::vector<Rational> pool;
  for (long b = 2; b <= 5; ++b)
    for (long a = 1; a < b; ++a)
      if (std::gcd(a, b) == 1) pool.push_back(q(a, b));
  std::vector<std::vector<Rational>> sets;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    sets.push_back({pool[i]});
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      sets.push_back({pool[i], pool[j]});
      for (std::size_t k = j + 1; k < pool.size(); ++k) sets.push_back({pool[i], pool[j], pool[k]});
    }
  }
  for (const auto& s : sets) {
    const auto r = multipoint_monic(s, 64);
    CHECK(r.poly.is_monic());
    CHECK(r.poly.degree().value() == r.degree);
    for (const auto& p : s)
      CHECK(homogeneous_eval(r.poly, p.get_num(), p.get_den()) == 1);
  }
}

TEST_CASE("inductive steps keep earlier values") {
  const std::vector<Rational> pts{q(1, 2), q(1, 3), q(2, 5)};
  const auto r = multipoint_monic(pts, 1000000, MultipointStrategy::Inductive);
  CHECK(r.method == MultipointStrategy::Inductive);
  REQUIRE(r.steps.size() == pts.size());
  CHECK(r.steps.back() == r.poly);
  for (std::size_t s = 0; s < r.steps.size(); ++s)
    for (std::size_t i = 0; i <= s; ++i)
      CHECK(homogeneous_eval(r.steps[s], pts[i].get_num(), pts[i].get_den()) == 1);
}

TEST_CASE("degree cap") {
  const std::vector<Rational> pts{q(1, 3), q(2, 5), q(3, 7)};
  CHECK_THROWS_AS(multipoint_monic(pts, 3, MultipointStrategy::Inductive), DegreeLimitError);
  try {
    multipoint_monic(pts, 3, MultipointStrategy::Inductive);
  } catch (const DegreeLimitError& e) {
    REQUIRE(e.minimal_degree.has_value());
    CHECK(*e.minimal_degree == admissible_degree(pts));
  }
  // The minimal-degree path answers well below the inductive degree.
  const auto m = minimal_degree_monic(pts, 64);
  REQUIRE(m.has_value());
  CHECK(BigInt(m->degree) <= admissible_degree(pts));
  for (const auto& p : pts) CHECK(homogeneous_eval(m->poly, p.get_num(), p.get_den()) == 1);
}

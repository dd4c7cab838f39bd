#include "mic/construct.hpp"

#include <algorithm>
#include <map>

namespace mic {

namespace {

BigInt power(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool divides(const BigInt& d, const BigInt& v) { return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0; }

BigInt exact_div(const BigInt& v, const BigInt& d) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return q;
}

void require_congruence(const BigInt& target, const BigInt& a, const BigInt& b, unsigned long n, int index) {
  if (!divides(b, target - power(a, n)))
    throw DomainError("congruence A" + std::to_string(index) + " = a" + std::to_string(index) + "^n (mod b" +
                      std::to_string(index) + ") fails: " + to_string(target) + " vs " + to_string(a) + "^" +
                      std::to_string(n) + " mod " + to_string(b));
}

using Factorization = std::map<BigInt, unsigned long>;

Factorization factor(BigInt n) {
  Factorization f;
  n = abs(n);
  if (n <= 1) return f;
  for (unsigned long p = 2; p <= 10'000'000UL; p += (p == 2 ? 1 : 2)) {
    const BigInt bp(p);
    if (bp * bp > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++f[bp];
      n /= bp;
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) throw DomainError("modulus too large to factor: " + to_string(n));
    ++f[n];
  }
  return f;
}

void merge_max(Factorization& into, const Factorization& other) {
  for (const auto& [p, e] : other) into[p] = std::max(into[p], e);
}

// Carmichael function of m, returned in factored form.
Factorization carmichael(const Factorization& m) {
  Factorization lambda;
  for (const auto& [p, e] : m) {
    Factorization part;
    if (p == 2) {
      if (e == 2) part[BigInt(2)] = 1;
      else if (e >= 3) part[BigInt(2)] = e - 2;
    } else {
      if (e > 1) part[p] = e - 1;
      for (const auto& [q, k] : factor(p - 1)) part[q] += k;
    }
    merge_max(lambda, part);
  }
  return lambda;
}

BigInt expand(const Factorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f) r *= power(p, e);
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Part of v supported on primes dividing b (first), and the rest (second).
std::pair<BigInt, BigInt> split_by_support(const BigInt& v, const BigInt& b) {
  BigInt inside = 1;
  BigInt rest = abs(v);
  BigInt g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), b.get_mpz_t());
    if (g == 1) break;
    inside *= g;
    rest /= g;
  }
  return {inside, rest};
}

void validate_points(const std::vector<Rational>& points) {
  if (points.empty()) throw DomainError("at least one point is required");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].get_den() == 1) throw DomainError("point " + to_string(points[i]) + " is an integer");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw DomainError("point " + to_string(points[i]) + " is repeated");
  }
}

}  // namespace

IntPoly pair_polynomial(const FareyPair& pair, unsigned long n, const BigInt& target1, const BigInt& target2) {
  if (n < 2) throw DomainError("pair_polynomial requires n >= 2");
  require_congruence(target1, pair.a1(), pair.b1(), n, 1);
  require_congruence(target2, pair.a2(), pair.b2(), n, 2);
  const BigInt c1 = exact_div(target1 - power(pair.a1(), n), pair.b1());
  const BigInt c2 = exact_div(target2 - power(pair.a2(), n), pair.b2());
  IntPoly f = IntPoly::monomial(n);
  f += pow(IntPoly::linear(pair.b2(), -pair.a2()), n - 1) * c1;
  f += pow(IntPoly::linear(-pair.b1(), pair.a1()), n - 1) * c2;
  return f;
}

IntPoly triple_polynomial(const FareyPair& pair, unsigned long n, const BigInt& target1, const BigInt& target2,
                          const BigInt& target3, unsigned long split) {
  if (n < 3) throw DomainError("triple_polynomial requires n >= 3");
  if (split < 1 || split > n - 2) throw DomainError("triple_polynomial requires 1 <= j <= n-2");
  const BigInt a3 = pair.a1() + pair.a2();
  const BigInt b3 = pair.b1() + pair.b2();
  require_congruence(target3, a3, b3, n, 3);
  IntPoly f = pair_polynomial(pair, n, target1, target2);
  const BigInt c1 = exact_div(target1 - power(pair.a1(), n), pair.b1());
  const BigInt c2 = exact_div(target2 - power(pair.a2(), n), pair.b2());
  const BigInt c3 = exact_div(target3 - power(a3, n), b3);
  const IntPoly correction =
      pow(IntPoly::linear(pair.b2(), -pair.a2()), split) * pow(IntPoly::linear(-pair.b1(), pair.a1()), n - 1 - split);
  f += correction * BigInt(c3 - c2 - c1);
  return f;
}

BigInt multiplicative_order(const BigInt& a, const BigInt& m) {
  if (m < 1) throw DomainError("modulus must be positive");
  if (m == 1) return 1;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw DomainError(to_string(a) + " is not invertible modulo " + to_string(m));
  const Factorization lambda = carmichael(factor(m));
  BigInt order = expand(lambda);
  BigInt residue;
  for (const auto& [q, e] : lambda) {
    for (unsigned long i = 0; i < e; ++i) {
      const BigInt candidate = order / q;
      mpz_powm(residue.get_mpz_t(), a.get_mpz_t(), candidate.get_mpz_t(), m.get_mpz_t());
      if (residue != 1) break;
      order = candidate;
    }
  }
  return order;
}

ConstructionState construction_state(const std::vector<Rational>& points) {
  validate_points(points);
  ConstructionState s;
  s.points = points;
  const std::size_t k = points.size();
  s.e.assign(k, BigInt(1));
  for (std::size_t j = 1; j < k; ++j) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < j; ++i)
      prod *= points[j].get_num() * points[i].get_den() - points[i].get_num() * points[j].get_den();
    s.e[j] = prod;
    s.d = lcm(s.d, abs(prod));
  }
  unsigned long max_exponent = 0;
  for (const auto& [p, e] : factor(s.d)) max_exponent = std::max(max_exponent, e);
  s.m = max_exponent + 1;
  const unsigned long km = k * s.m;

  BigInt period = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const BigInt& a = points[j].get_num();
    const BigInt& b = points[j].get_den();
    auto [d1, d2] = split_by_support(s.d, b);
    s.d1.push_back(d1);
    s.d2.push_back(d2);
    auto [e1, e2] = split_by_support(s.e[j], b);
    s.e1.push_back(e1);
    s.e2.push_back(e2);
    // a_j^n = 1 mod b_j^{km}
    period = lcm(period, multiplicative_order(a, power(b, km)));
    // b_j^n = 1 mod D2(j)^{km}
    if (d2 > 1) period = lcm(period, multiplicative_order(b, power(d2, km)));
    ExtendedGcd inv = extended_gcd(a, b);
    s.inverses.push_back(inv);
  }
  BigInt blocks;
  mpz_cdiv_q(blocks.get_mpz_t(), BigInt(km).get_mpz_t(), period.get_mpz_t());
  s.degree = period * blocks;
  return s;
}

BigInt admissible_degree(const std::vector<Rational>& points) { return construction_state(points).degree; }

namespace {

MultipointResult inductive_monic(const ConstructionState& s) {
  const std::size_t k = s.points.size();
  const unsigned long n = s.degree.get_ui();
  const unsigned long km = k * s.m;
  MultipointResult result;
  result.degree = n;
  result.method = MultipointStrategy::Inductive;

  const BigInt& a1 = s.points[0].get_num();
  const BigInt& b1 = s.points[0].get_den();
  const BigInt lead = exact_div(1 - power(a1, n), power(b1, km));
  IntPoly f = IntPoly::monomial(n);
  f += pow(IntPoly::linear(s.inverses[0].l, -s.inverses[0].f), n - km) * lead;
  result.steps.push_back(f);

  IntPoly vanishing = IntPoly::linear(b1, -a1);
  for (std::size_t r = 1; r < k; ++r) {
    const BigInt& a = s.points[r].get_num();
    const BigInt& b = s.points[r].get_den();
    const BigInt residual = homogeneous_eval(f, a, b) - 1;
    const BigInt divisor = power(b, (k - r) * s.m) * s.e[r];
    if (!divides(divisor, residual))
      throw std::logic_error("inductive construction: divisibility failed at point " + to_string(s.points[r]));
    const BigInt multiplier = -exact_div(residual, divisor);
    const unsigned long q_degree = n - (k - r) * s.m - r;
    f += pow(IntPoly::linear(s.inverses[r].l, -s.inverses[r].f), q_degree) * vanishing * multiplier;
    result.steps.push_back(f);
    vanishing *= IntPoly::linear(b, -a);
  }
  result.poly = std::move(f);
  return result;
}

// Solves M g = c over Z by unimodular column operations; nullopt if no
// integer solution exists.
std::optional<std::vector<BigInt>> solve_integer_system(std::vector<std::vector<BigInt>> h, const std::vector<BigInt>& c) {
  const std::size_t rows = h.size();
  const std::size_t cols = rows ? h[0].size() : 0;
  std::vector<std::vector<BigInt>> u(cols, std::vector<BigInt>(cols, BigInt(0)));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto column_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) h[i][dst] -= q * h[i][src];
    for (std::size_t i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
  };
  auto column_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(h[i][x], h[i][y]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][x], u[i][y]);
  };

  std::vector<std::optional<std::size_t>> pivot(rows);
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows && col < cols; ++r) {
    for (;;) {
      std::optional<std::size_t> best;
      std::size_t nonzero = 0;
      for (std::size_t j = col; j < cols; ++j) {
        if (h[r][j] == 0) continue;
        ++nonzero;
        if (!best || abs(h[r][j]) < abs(h[r][*best])) best = j;
      }
      if (nonzero <= 1) {
        if (best) {
          column_swap(col, *best);
          pivot[r] = col++;
        }
        break;
      }
      for (std::size_t j = col; j < cols; ++j) {
        if (j == *best || h[r][j] == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), h[r][j].get_mpz_t(), h[r][*best].get_mpz_t());
        column_axpy(j, *best, q);
      }
    }
  }

  std::vector<BigInt> y(cols, BigInt(0));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt s = c[r];
    for (std::size_t j = 0; j < col; ++j) s -= h[r][j] * y[j];
    if (pivot[r]) {
      const BigInt& p = h[r][*pivot[r]];
      if (!divides(p, s)) return std::nullopt;
      y[*pivot[r]] = exact_div(s, p);
    } else if (s != 0) {
      return std::nullopt;
    }
  }
  std::vector<BigInt> g(cols, BigInt(0));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) g[i] += u[i][j] * y[j];
  return g;
}

}  // namespace

std::optional<MultipointResult> minimal_degree_monic(const std::vector<Rational>& points, unsigned long max_degree) {
  validate_points(points);
  for (unsigned long n = 1; n <= max_degree; ++n) {
    // b_i^n g(a_i/b_i) = 1 - a_i^n for the lower part g of F = x^n + g.
    std::vector<std::vector<BigInt>> m;
    std::vector<BigInt> rhs;
    for (const auto& p : points) {
      std::vector<BigInt> row(n);
      for (unsigned long j = 0; j < n; ++j) row[j] = power(p.get_num(), j) * power(p.get_den(), n - j);
      m.push_back(std::move(row));
      rhs.push_back(1 - power(p.get_num(), n));
    }
    auto g = solve_integer_system(std::move(m), rhs);
    if (!g) continue;
    g->push_back(BigInt(1));
    MultipointResult result;
    result.degree = n;
    result.poly = IntPoly(std::move(*g));
    result.method = MultipointStrategy::MinimalDegree;
    return result;
  }
  return std::nullopt;
}

MultipointResult multipoint_monic(const std::vector<Rational>& points, unsigned long max_degree,
                                  MultipointStrategy strategy) {
  validate_points(points);
  if (strategy == MultipointStrategy::MinimalDegree) {
    auto r = minimal_degree_monic(points, max_degree);
    if (!r) throw DegreeLimitError("no monic solution of degree <= " + std::to_string(max_degree), std::nullopt);
    return *r;
  }
  const ConstructionState state = construction_state(points);
  if (state.degree <= max_degree) return inductive_monic(state);
  if (strategy == MultipointStrategy::Inductive)
    throw DegreeLimitError("minimal admissible degree " + to_string(state.degree) + " exceeds cap " +
                               std::to_string(max_degree),
                           state.degree);
  auto r = minimal_degree_monic(points, max_degree);
  if (!r)
    throw DegreeLimitError("no monic solution of degree <= " + std::to_string(max_degree) +
                               "; inductive construction needs degree " + to_string(state.degree),
                           state.degree);
  return *r;
}

}  // namespace mic

#include "mic/numpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_signed_digits(std::string_view s, BigInt& out) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  if (!std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }))
    return false;
  out.set_str(std::string(s), 10);
  if (negative) out = -out;
  return true;
}

std::vector<std::string> tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  BigInt num;
  BigInt den = 1;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_signed_digits(s, num)) throw ParseError("malformed rational: '" + std::string(text) + "'");
  } else {
    if (!parse_signed_digits(s.substr(0, slash), num) || !parse_signed_digits(s.substr(slash + 1), den))
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

BigInt parse_integer(std::string_view text) {
  BigInt v;
  if (!parse_signed_digits(trim(text), v)) throw ParseError("malformed integer: '" + std::string(text) + "'");
  return v;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw DomainError("interval requires lo < hi, got [" + to_string(lo_) + ", " + to_string(hi_) + "]");
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

IntPoly clear_denominators(const RatPoly& p) {
  BigInt l = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v.get_num() * (l / v.get_den()));
  return IntPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) throw DomainError("coefficient " + to_string(v) + " is not an integer");
    c.emplace_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

Rational poly_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt poly_eval(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt homogeneous_eval(const IntPoly& p, const BigInt& a, const BigInt& b) {
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  BigInt acc = c.back();
  BigInt bp = 1;
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    bp *= b;
    acc = acc * a + c[j] * bp;
  }
  return acc;
}

Rational poly_eval(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), p.degree().value());
  return make_rational(homogeneous_eval(p, x.get_num(), x.get_den()), den);
}

int sign_at(const IntPoly& p, const Rational& x) { return sgn(homogeneous_eval(p, x.get_num(), x.get_den())); }

RatPoly poly_affine_compose(const RatPoly& p, const Rational& alpha, const Rational& beta) {
  const RatPoly lin = RatPoly::linear(alpha, beta);
  RatPoly r;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * lin + RatPoly::constant(*it);
  return r;
}

IntPoly poly_affine_compose(const IntPoly& p, const BigInt& alpha, const BigInt& beta) {
  const IntPoly lin = IntPoly::linear(alpha, beta);
  IntPoly r;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * lin + IntPoly::constant(*it);
  return r;
}

Rational poly_integrate_product(const RatPoly& p, const RatPoly& q, const Interval& iv) {
  const RatPoly prod = p * q;
  Rational total = 0;
  Rational lo_pow = iv.lo();
  Rational hi_pow = iv.hi();
  for (std::size_t j = 0; j < prod.size(); ++j) {
    total += prod.coeffs()[j] * (hi_pow - lo_pow) / Rational(static_cast<unsigned long>(j + 1));
    lo_pow *= iv.lo();
    hi_pow *= iv.hi();
  }
  return total;
}

std::vector<Rational> to_bernstein(const RatPoly& p, const Interval& iv, std::size_t degree) {
  if (!p.is_zero() && p.degree().value() > degree) throw DomainError("Bernstein degree below polynomial degree");
  const RatPoly q = poly_affine_compose(p, iv.width(), iv.lo());
  std::vector<Rational> out(degree + 1, Rational(0));
  for (std::size_t i = 0; i <= degree; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= i && j < q.size(); ++j) {
      if (q.coeffs()[j] == 0) continue;
      acc += q.coeffs()[j] * Rational(binomial(i, j)) / Rational(binomial(degree, j));
    }
    out[i] = acc;
  }
  return out;
}

std::vector<Rational> to_bernstein(const RatPoly& p, const Interval& iv) {
  return to_bernstein(p, iv, p.is_zero() ? 0 : p.degree().value());
}

std::pair<std::vector<Rational>, std::vector<Rational>> bernstein_split(std::span<const Rational> coeffs) {
  if (coeffs.empty()) throw DomainError("bernstein_split needs at least one coefficient");
  const std::size_t n = coeffs.size();
  std::vector<Rational> work(coeffs.begin(), coeffs.end());
  std::vector<Rational> left(n);
  std::vector<Rational> right(n);
  left[0] = work[0];
  right[n - 1] = work[n - 1];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) work[i] = (work[i] + work[i + 1]) / 2;
    left[level] = work[0];
    right[n - 1 - level] = work[n - 1 - level];
  }
  return {std::move(left), std::move(right)};
}

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) throw DomainError("extended_gcd(0, 0) is undefined");
  ExtendedGcd r;
  BigInt s;
  BigInt t;
  mpz_gcdext(r.g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (b == 0) {
    r.l = sgn(a);
    r.f = 0;
    return r;
  }
  const BigInt step = abs(b) / r.g;
  BigInt l;
  mpz_fdiv_r(l.get_mpz_t(), s.get_mpz_t(), step.get_mpz_t());
  if (l == 0) l = step;
  r.l = l;
  r.f = (a * l - r.g) / b;
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.is_zero() || num.degree() < den.degree()) return {RatPoly{}, num};
  const std::size_t dd = den.degree().value();
  std::vector<Rational> rem = num.coeffs();
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  const Rational& lead = den.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Rational factor = rem[k] / lead;
    quot[k - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * den.coeffs()[j];
  }
  rem.resize(dd);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    c.push_back(std::move(q));
  }
  return IntPoly(std::move(c));
}

IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const std::size_t db = b.degree().value();
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree().value() >= db) {
    const std::size_t shift = a.degree().value() - db;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.leading().get_mpz_t(), lb.get_mpz_t());
    const BigInt ma = abs(lb) / g;
    const BigInt mb = (a.leading() / g) * sgn(lb);
    a = a * ma - b.shifted(shift) * mb;
  }
  return a;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(positive_pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::logic_error("exact_quotient: divisor degree exceeds dividend degree");
  const std::size_t db = b.degree().value();
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(rem.size() - db, BigInt(0));
  const BigInt& lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("exact_quotient: division is not exact");
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
    quot[k - db] = std::move(factor);
  }
  for (std::size_t j = 0; j < db; ++j)
    if (rem[j] != 0) throw std::logic_error("exact_quotient: nonzero remainder");
  return IntPoly(std::move(quot));
}

std::string format_poly(const IntPoly& p) {
  if (p.is_zero()) return "poly 0";
  std::string out = "poly";
  for (const auto& v : p.coeffs()) out += " " + to_string(v);
  return out;
}

std::string format_poly(const RatPoly& p) {
  if (p.is_zero()) return "poly 0";
  std::string out = "poly";
  for (const auto& v : p.coeffs()) out += " " + to_string(v);
  return out;
}

IntPoly parse_int_poly(std::string_view text) {
  const auto t = tokens(text);
  if (t.empty() || t.front() != "poly") throw ParseError("polynomial text must start with 'poly'");
  if (t.size() < 2) throw ParseError("polynomial text has no coefficients");
  std::vector<BigInt> c;
  for (std::size_t i = 1; i < t.size(); ++i) c.push_back(parse_integer(t[i]));
  return IntPoly(std::move(c));
}

RatPoly parse_rat_poly(std::string_view text) {
  const auto t = tokens(text);
  if (t.empty() || t.front() != "poly") throw ParseError("polynomial text must start with 'poly'");
  if (t.size() < 2) throw ParseError("polynomial text has no coefficients");
  std::vector<Rational> c;
  for (std::size_t i = 1; i < t.size(); ++i) c.push_back(parse_rational(t[i]));
  return RatPoly(std::move(c));
}

std::string pretty(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const BigInt mag = abs(c[k]);
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace mic

#pragma once

// Exact rational scalars and dense univariate polynomials.
//
// Coefficients are stored ascending by power (c0 first). The zero polynomial
// is the empty coefficient list and has degree -infinity, represented by a
// dedicated Degree value rather than a magic integer.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mic {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Malformed text input (rationals, polynomials, table files).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size or degree cap set by the caller was reached before an answer.
class LimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Accepts "a", "a/b", with an optional sign on either part. Result is reduced
/// with a positive denominator.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& v);
/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& v);

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Polynomial degree; -infinity for the zero polynomial.
class Degree {
 public:
  static constexpr Degree neg_infinity() { return Degree(); }
  constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

  constexpr bool is_neg_infinity() const { return !finite_; }
  std::size_t value() const {
    if (!finite_) throw DomainError("degree of the zero polynomial is -infinity");
    return value_;
  }

  constexpr bool operator==(const Degree&) const = default;
  constexpr std::strong_ordering operator<=>(const Degree& o) const {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return value_ <=> o.value_;
  }

 private:
  constexpr Degree() = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& v) { return Polynomial(std::vector<Coeff>{v}); }
  static Polynomial monomial(std::size_t power, const Coeff& v = Coeff(1)) {
    std::vector<Coeff> c(power + 1, Coeff(0));
    c[power] = v;
    return Polynomial(std::move(c));
  }
  /// slope*x + intercept
  static Polynomial linear(const Coeff& slope, const Coeff& intercept) {
    return Polynomial(std::vector<Coeff>{intercept, slope});
  }

  const std::vector<Coeff>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree::neg_infinity() : Degree(c_.size() - 1); }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiplies by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> r(k, Coeff(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Coeff(static_cast<unsigned long>(i));
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

template <class Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& p, std::size_t e) {
  Polynomial<Coeff> result = Polynomial<Coeff>::constant(Coeff(1));
  Polynomial<Coeff> base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

/// Closed interval [lo, hi] with rational endpoints, lo < hi.
class Interval {
 public:
  Interval(Rational lo, Rational hi);
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool operator==(const Interval&) const = default;

 private:
  Rational lo_;
  Rational hi_;
};

RatPoly to_rational(const IntPoly& p);
/// Multiplies by the lcm of denominators (a positive factor), giving an
/// integer polynomial with the same roots and the same sign everywhere.
IntPoly clear_denominators(const RatPoly& p);
/// Throws DomainError when some coefficient is not an integer.
IntPoly to_integer(const RatPoly& p);

Rational poly_eval(const RatPoly& p, const Rational& x);
Rational poly_eval(const IntPoly& p, const Rational& x);
BigInt poly_eval(const IntPoly& p, const BigInt& x);
/// b^deg(p) * p(a/b) computed in integers; b > 0 keeps the sign of p(a/b).
BigInt homogeneous_eval(const IntPoly& p, const BigInt& a, const BigInt& b);
int sign_at(const IntPoly& p, const Rational& x);

/// q(x) = p(alpha*x + beta), by synthetic substitution.
RatPoly poly_affine_compose(const RatPoly& p, const Rational& alpha, const Rational& beta);
IntPoly poly_affine_compose(const IntPoly& p, const BigInt& alpha, const BigInt& beta);
/// p(q(x)) for arbitrary q.
template <class Coeff>
Polynomial<Coeff> poly_compose(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  Polynomial<Coeff> r;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    r = r * q + Polynomial<Coeff>::constant(*it);
  return r;
}

/// Exact integral of p*q over the interval.
Rational poly_integrate_product(const RatPoly& p, const RatPoly& q, const Interval& iv);

/// Degree-d Bernstein coefficients of p on iv, d = max(deg p, 0).
std::vector<Rational> to_bernstein(const RatPoly& p, const Interval& iv);
/// Same, but elevated to a requested degree (>= deg p).
std::vector<Rational> to_bernstein(const RatPoly& p, const Interval& iv, std::size_t degree);
/// de Casteljau subdivision at the parameter midpoint.
std::pair<std::vector<Rational>, std::vector<Rational>> bernstein_split(std::span<const Rational> coeffs);

struct ExtendedGcd {
  BigInt g;
  BigInt l;
  BigInt f;
};
/// g = gcd(a, b) > 0 with a*l - b*f = g; l normalised into [1, |b|/g].
ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

/// Quotient and remainder over Q.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);
BigInt content(const IntPoly& p);
/// p / content(p), with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
/// c * (a mod b) for some integer c > 0, so signs of the remainder are those
/// of the rational remainder.
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
/// a / b over Z; throws std::logic_error if the division is not exact.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// "poly c0 c1 ... cn"
std::string format_poly(const IntPoly& p);
std::string format_poly(const RatPoly& p);
IntPoly parse_int_poly(std::string_view text);
RatPoly parse_rat_poly(std::string_view text);
/// Human-readable, descending powers: "x^2 - 3*x + 1".
std::string pretty(const IntPoly& p);

}  // namespace mic

#include "mic/constants.hpp"

#include <cctype>
#include <cmath>

namespace mic {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string shifted_square(const Rational& c) {
  if (sgn(c) == 0) return "z^2";
  return sgn(c) > 0 ? "(z-" + to_string(c) + ")^2" : "(z+" + to_string(-c) + ")^2";
}

// n when q = 1/n for an integer n >= 2.
std::optional<BigInt> reciprocal_of_integer(const Rational& q) {
  if (sgn(q) <= 0 || q.get_num() != 1 || q.get_den() < 2) return std::nullopt;
  return BigInt(q.get_den());
}

const BigInt& common_surd(const SymbolicEndpoint& x, const SymbolicEndpoint& y) {
  if (x.is_rational()) return y.surd();
  if (y.is_rational() || x.surd() == y.surd()) return x.surd();
  throw DomainError("endpoints lie in different quadratic fields");
}

}  // namespace

SymbolicEndpoint::SymbolicEndpoint(Rational a, Rational c, const BigInt& radicand) : a_(std::move(a)) {
  if (sgn(radicand) < 0) throw DomainError("square root of a negative number");
  if (sgn(c) == 0 || sgn(radicand) == 0) return;
  BigInt s = radicand;
  BigInt outside = 1;
  for (BigInt p = 2; p * p <= s; ++p) {
    const BigInt p2 = p * p;
    while (s % p2 == 0) {
      s /= p2;
      outside *= p;
    }
  }
  if (s == 1) {
    a_ += c * outside;
    return;
  }
  c_ = c * outside;
  s_ = s;
}

int SymbolicEndpoint::sign() const {
  const int sa = sgn(a_);
  const int sc = sgn(c_);
  if (sc == 0) return sa;
  if (sa == 0 || sa == sc) return sc;
  // Opposite signs: the larger of a^2 and c^2 s wins.
  const Rational lhs = a_ * a_;
  const Rational rhs = c_ * c_ * Rational(s_);
  return lhs > rhs ? sa : sc;
}

SymbolicEndpoint operator+(const SymbolicEndpoint& x, const SymbolicEndpoint& y) {
  const BigInt& s = common_surd(x, y);
  return SymbolicEndpoint(x.a_ + y.a_, x.c_ + y.c_, s);
}

SymbolicEndpoint operator*(const SymbolicEndpoint& x, const SymbolicEndpoint& y) {
  const BigInt& s = common_surd(x, y);
  return SymbolicEndpoint(x.a_ * y.a_ + x.c_ * y.c_ * Rational(s), x.a_ * y.c_ + x.c_ * y.a_, s);
}

SymbolicEndpoint operator/(const SymbolicEndpoint& x, const SymbolicEndpoint& y) {
  if (y.sign() == 0) throw DomainError("division by zero");
  const Rational norm = y.a_ * y.a_ - y.c_ * y.c_ * Rational(y.s_);
  const SymbolicEndpoint conj(y.a_ / norm, -y.c_ / norm, y.s_);
  return x * conj;
}

std::strong_ordering operator<=>(const SymbolicEndpoint& x, const SymbolicEndpoint& y) {
  return (x - y).sign() <=> 0;
}

std::string SymbolicEndpoint::to_string() const {
  if (is_rational()) return mic::to_string(a_);
  std::string out;
  if (sgn(a_) != 0) out = mic::to_string(a_);
  Rational c = c_;
  if (sgn(c) < 0) {
    out += "-";
    c = -c;
  } else if (!out.empty()) {
    out += "+";
  }
  if (c != 1) out += mic::to_string(c) + "*";
  return out + "sqrt(" + mic::to_string(s_) + ")";
}

double SymbolicEndpoint::approx() const { return a_.get_d() + c_.get_d() * std::sqrt(s_.get_d()); }

namespace {

class EndpointParser {
 public:
  explicit EndpointParser(std::string_view text) : t_(text) {}

  SymbolicEndpoint run() {
    SymbolicEndpoint v = expr();
    skip();
    if (i_ != t_.size()) fail("unexpected '" + std::string(1, t_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad endpoint '" + std::string(t_) + "': " + why);
  }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  SymbolicEndpoint expr() {
    SymbolicEndpoint v = term();
    while (true) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  SymbolicEndpoint term() {
    SymbolicEndpoint v = factor();
    while (true) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) v = v / factor();
      else return v;
    }
  }
  SymbolicEndpoint factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    if (eat('(')) {
      SymbolicEndpoint v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    skip();
    if (t_.substr(i_, 4) == "sqrt") {
      i_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      const SymbolicEndpoint arg = expr();
      if (!eat(')')) fail("missing ')'");
      if (!arg.is_rational() || sgn(arg.rational_part()) < 0) fail("sqrt needs a nonnegative rational");
      // sqrt(p/q) = sqrt(p q) / q
      const Rational& q = arg.rational_part();
      return SymbolicEndpoint(Rational(0), make_rational(BigInt(1), q.get_den()), q.get_num() * q.get_den());
    }
    const std::size_t start = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return SymbolicEndpoint(Rational(BigInt(std::string(t_.substr(start, i_ - start)), 10)));
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

}  // namespace

SymbolicEndpoint SymbolicEndpoint::parse(std::string_view text) {
  try {
    return EndpointParser(text).run();
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError("bad endpoint '" + std::string(text) + "': " + e.what());
  }
}

ConstantValue point_constant(const Rational& p) {
  if (is_integer(p)) return ConstantValue(Rational(0));
  return ConstantValue(make_rational(BigInt(1), p.get_den()));
}

ConstantValue finite_set_constant(const std::vector<Rational>& points, bool allow_integers) {
  if (points.empty()) throw DomainError("point set is empty");
  ConstantValue best(Rational(0));
  for (const auto& p : points) {
    if (is_integer(p) && !allow_integers) throw DomainError("integer point " + to_string(p) + " contributes 0");
    best = std::max(best, point_constant(p));
  }
  return best;
}

std::optional<CatalogConstant> symbolic_set_constant(const std::vector<SymbolicEndpoint>& points) {
  if (points.empty()) throw DomainError("point set is empty");
  bool all_rational = true;
  for (const auto& p : points) all_rational = all_rational && p.is_rational();
  if (all_rational) {
    std::vector<Rational> r;
    for (const auto& p : points) r.push_back(p.rational_part());
    return CatalogConstant{finite_set_constant(r, true), "largest reciprocal denominator"};
  }
  if (points.size() == 1) return CatalogConstant{ConstantValue(Rational(0)), "single irrational point"};
  if (points.size() != 2 || points[0] == points[1]) return std::nullopt;
  const SymbolicEndpoint centre = (points[0] + points[1]) / SymbolicEndpoint(Rational(2));
  if (!centre.is_rational()) return std::nullopt;
  const SymbolicEndpoint u = points[0] - centre;
  const SymbolicEndpoint u2 = u * u;
  const Rational& c = centre.rational_part();
  if (is_integer(c)) {
    const ConstantValue base = point_constant(u2.rational_part());
    return CatalogConstant{transform_constant(base, SetMap::Square),
                           "preimage under " + shifted_square(c) + " of the point " + to_string(u2.rational_part())};
  }
  if (is_integer(c * 2)) {
    const Rational image = Rational(1, 4) - u2.rational_part();
    return CatalogConstant{transform_constant(point_constant(image), SetMap::Logistic),
                           "preimage under a shifted z(1-z) of the point " + to_string(image)};
  }
  return std::nullopt;
}

namespace {

std::optional<CatalogConstant> classify(const SymbolicEndpoint& lo, const SymbolicEndpoint& hi, int depth) {
  const SymbolicEndpoint len = hi - lo;
  if (len.is_rational()) {
    if (len.rational_part() >= 4) return CatalogConstant{ConstantValue(len.rational_part() / 4), "capacity of an interval of length at least 4"};
  } else if (sgn(len.rational_part()) == 0) {
    const Rational sq = len.surd_coefficient() * len.surd_coefficient() * Rational(len.surd());
    if (sq >= 16) return CatalogConstant{ConstantValue(sq / 16, 2), "capacity of an interval of length at least 4"};
  } else if (len >= SymbolicEndpoint(Rational(4))) {
    return std::nullopt;  // capacity (hi-lo)/4 is not of the form r^(1/k)
  }

  const SymbolicEndpoint centre = (lo + hi) / SymbolicEndpoint(Rational(2));
  if (lo.is_rational() && hi.is_rational()) {
    const Rational& a = lo.rational_part();
    const Rational& L = len.rational_part();
    if (auto n = reciprocal_of_integer(L); n && (is_integer(a) || is_integer(a + L))) {
      const std::string what = *n == 2 ? "half-unit interval" : "interval of length 1/" + to_string(*n);
      return CatalogConstant{ConstantValue(L), what + " with an integer endpoint"};
    }
    if (is_integer(a) && L == 1) return CatalogConstant{ConstantValue(Rational(1, 2)), "unit interval between integers"};
    if (is_integer(a) && L == 2) return CatalogConstant{ConstantValue(Rational(1, 2), 2), "length-two interval between integers"};
    if (auto n = reciprocal_of_integer(L / 2); n && is_integer(centre.rational_part()))
      return CatalogConstant{ConstantValue(L / 2), "interval of half-length 1/" + to_string(*n) + " about an integer"};
  }
  if (!centre.is_rational()) return std::nullopt;
  const Rational& c = centre.rational_part();
  const SymbolicEndpoint u2 = (hi - centre) * (hi - centre);
  if (!u2.is_rational()) return std::nullopt;
  const Rational& half_sq = u2.rational_part();
  if (!lo.is_rational()) {
    if (auto n = reciprocal_of_integer(half_sq); n && is_integer(c))
      return CatalogConstant{ConstantValue(half_sq, 2), "interval of half-length 1/sqrt(" + to_string(*n) + ") about an integer"};
    if (half_sq == Rational(1, 2) && !is_integer(c) && is_integer(2 * c))
      return CatalogConstant{ConstantValue(Rational(1, 2)), "interval of half-length sqrt(2)/2 about a half-integer"};
  }

  if (depth >= 4) return std::nullopt;
  if (is_integer(c)) {
    // [c-u, c+u] is the preimage of [0, u^2] under (z-c)^2.
    if (auto sub = classify(SymbolicEndpoint(Rational(0)), u2, depth + 1)) {
      return CatalogConstant{transform_constant(sub->value, SetMap::Square),
                             "preimage under " + shifted_square(c) + " of [0, " + to_string(half_sq) + "]; " + sub->provenance};
    }
  } else if (is_integer(2 * c)) {
    // [c-u, c+u] is the preimage of [1/4-u^2, 1/4] under (z-c+1/2)(c+1/2-z).
    const Rational image_lo = Rational(1, 4) - half_sq;
    if (auto sub = classify(SymbolicEndpoint(image_lo), SymbolicEndpoint(Rational(1, 4)), depth + 1)) {
      return CatalogConstant{transform_constant(sub->value, SetMap::Logistic),
                             "preimage under a shifted z(1-z) of [" + to_string(image_lo) + ", 1/4]; " + sub->provenance};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CatalogConstant> interval_constant(const SymbolicEndpoint& lo, const SymbolicEndpoint& hi) {
  if (lo >= hi) throw DomainError("interval requires lo < hi");
  return classify(lo, hi, 0);
}

const char* status_name(ConjectureStatus s) {
  return s == ConjectureStatus::ProvenEqual ? "PROVEN-EQUAL" : "CONJECTURED";
}

ConjectureValue conjecture_value(const FareyPair& pair, const WitnessRecord* witness) {
  const ConstantValue value(witness_base(pair));
  if (witness != nullptr && witness->pair == pair && witness->norm_equals_bound())
    return {value, ConjectureStatus::ProvenEqual, "certified witness of degree " + std::to_string(witness->degree)};
  if (auto known = interval_constant(SymbolicEndpoint(pair.lo()), SymbolicEndpoint(pair.hi())); known && known->value == value)
    return {value, ConjectureStatus::ProvenEqual, known->provenance};
  return {value, ConjectureStatus::Conjectured, "endpoint lower bound only"};
}

ConstantValue transform_constant(const ConstantValue& value, SetMap map) {
  switch (map) {
    case SetMap::Shift:
    case SetMap::Negate:
      return value;
    case SetMap::Square:
    case SetMap::Logistic:
      return ConstantValue(value.radicand(), value.root() * 2);
  }
  return value;
}

}  // namespace mic

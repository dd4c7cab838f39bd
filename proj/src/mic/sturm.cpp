#include "mic/sturm.hpp"

#include <deque>

namespace mic {

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  std::vector<IntPoly> factors;
  const IntPoly f = primitive_part(p);
  if (f.is_zero() || f.degree().value() == 0) return factors;
  const IntPoly df = f.derivative();
  const IntPoly a = poly_gcd(f, df);
  IntPoly b = exact_quotient(f, a);
  IntPoly c = exact_quotient(df, a);
  IntPoly d = c - b.derivative();
  while (b.degree().value() > 0) {
    const IntPoly g = poly_gcd(b, d);
    factors.push_back(g);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree().value() == 0) factors.pop_back();
  return factors;
}

IntPoly odd_multiplicity_part(const IntPoly& p) {
  IntPoly out = IntPoly::constant(BigInt(1));
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); i += 2) out *= factors[i];
  return out;
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  seq_.push_back(primitive_part(p));
  if (seq_.back().degree().value() == 0) return;
  seq_.push_back(primitive_part(seq_.back().derivative()));
  while (seq_.back().degree().value() > 0) {
    // Next term is -rem(prev, last); positive scalings keep the signs intact.
    IntPoly r = positive_pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    r = -r;
    const BigInt c = content(r);
    std::vector<BigInt> scaled(r.coeffs());
    for (auto& v : scaled) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    seq_.emplace_back(std::move(scaled));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : seq_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t SturmSequence::roots_in_half_open(const Rational& a, const Rational& b) const {
  return static_cast<std::size_t>(variations(a) - variations(b));
}

std::size_t SturmSequence::roots_in_open(const Rational& a, const Rational& b) const {
  std::size_t n = roots_in_half_open(a, b);
  if (sign_at(base(), b) == 0) --n;
  return n;
}

std::size_t SturmSequence::roots_in_closed(const Rational& a, const Rational& b) const {
  std::size_t n = roots_in_half_open(a, b);
  if (sign_at(base(), a) == 0) ++n;
  return n;
}

namespace {

// A point of (lo, hi) where q does not vanish; q must be nonzero.
Rational nonzero_sample(const IntPoly& q, const Rational& lo, const Rational& hi) {
  for (unsigned long den = 2;; ++den) {
    for (unsigned long num = 1; num < den; ++num) {
      const Rational x = lo + (hi - lo) * make_rational(BigInt(num), BigInt(den));
      if (sign_at(q, x) != 0) return x;
    }
  }
}

}  // namespace

std::optional<Rational> find_negative_point(const IntPoly& q, const Interval& iv) {
  if (q.is_zero()) return std::nullopt;
  if (sign_at(q, iv.lo()) < 0) return iv.lo();
  if (sign_at(q, iv.hi()) < 0) return iv.hi();
  const IntPoly g = odd_multiplicity_part(q);
  if (g.degree().value() == 0 || SturmSequence(g).roots_in_open(iv.lo(), iv.hi()) == 0) {
    // Sign is constant on the interior apart from touch points.
    const Rational x = nonzero_sample(q, iv.lo(), iv.hi());
    if (sign_at(q, x) < 0) return x;
    return std::nullopt;
  }
  // q changes sign at a root of g inside the interval: refine around the
  // roots of g until a midpoint lands on the negative side.
  const SturmSequence sturm(g);
  std::deque<std::pair<Rational, Rational>> work{{iv.lo(), iv.hi()}};
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    const Rational mid = (a + b) / 2;
    if (sign_at(q, mid) < 0) return mid;
    if (sturm.roots_in_closed(a, mid) > 0) work.emplace_back(a, mid);
    if (sturm.roots_in_closed(mid, b) > 0) work.emplace_back(mid, b);
  }
  throw std::logic_error("find_negative_point: sign change located but no negative sample found");
}

}  // namespace mic

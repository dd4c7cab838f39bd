#include "mic/constant_value.hpp"

#include <cmath>

namespace mic {

namespace {

Rational rational_pow(const Rational& base, unsigned long e) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  return make_rational(num, den);
}

}  // namespace

bool exact_root(const Rational& r, unsigned long k, Rational& out) {
  if (r < 0) return false;
  BigInt num;
  BigInt den;
  if (mpz_root(num.get_mpz_t(), r.get_num().get_mpz_t(), k) == 0) return false;
  if (mpz_root(den.get_mpz_t(), r.get_den().get_mpz_t(), k) == 0) return false;
  out = make_rational(num, den);
  return true;
}

ConstantValue::ConstantValue(Rational r, unsigned long k) : r_(std::move(r)), k_(k) {
  if (k_ == 0) throw DomainError("constant root index must be positive");
  if (r_ < 0) throw DomainError("constant radicand must be nonnegative");
  if (r_ == 0 || r_ == 1) {
    k_ = 1;
    return;
  }
  for (unsigned long p = 2; p <= k_;) {
    Rational root;
    if (k_ % p == 0 && exact_root(r_, p, root)) {
      r_ = root;
      k_ /= p;
    } else {
      ++p;
    }
  }
}

std::strong_ordering operator<=>(const ConstantValue& a, const ConstantValue& b) {
  const Rational lhs = rational_pow(a.r_, b.k_);
  const Rational rhs = rational_pow(b.r_, a.k_);
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ConstantValue::to_string() const {
  if (k_ == 1) return mic::to_string(r_);
  return "(" + mic::to_string(r_) + ")^(1/" + std::to_string(k_) + ")";
}

double ConstantValue::approx() const { return std::pow(r_.get_d(), 1.0 / static_cast<double>(k_)); }

}  // namespace mic

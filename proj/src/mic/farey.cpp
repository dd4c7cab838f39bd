#include "mic/farey.hpp"

namespace mic {

FareyPair FareyPair::from_endpoints(const Rational& lo, const Rational& hi) {
  if (!is_consecutive_pair(lo, hi))
    throw DomainError("[" + to_string(lo) + ", " + to_string(hi) + "] is not a pair of consecutive Farey fractions");
  return FareyPair(hi.get_num(), hi.get_den(), lo.get_num(), lo.get_den());
}

std::vector<Rational> farey_sequence(long order) {
  if (order < 1) throw DomainError("Farey order must be >= 1");
  std::vector<Rational> out;
  // Next-term recurrence from the adjacent pair 0/1, 1/order.
  long a = 0, b = 1, c = 1, d = order;
  out.emplace_back(0);
  while (c <= order) {
    const long k = (order + b) / d;
    const long next_c = k * c - a;
    const long next_d = k * d - b;
    out.push_back(make_rational(BigInt(c), BigInt(d)));
    a = c;
    b = d;
    c = next_c;
    d = next_d;
    if (a == 1 && b == 1) break;
  }
  return out;
}

bool is_consecutive_pair(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("is_consecutive_pair requires lo < hi");
  return hi.get_num() * lo.get_den() - lo.get_num() * hi.get_den() == 1;
}

Rational mediant(const FareyPair& pair) {
  return make_rational(pair.a1() + pair.a2(), pair.b1() + pair.b2());
}

std::pair<FareyPair, FareyPair> split_at_mediant(const FareyPair& pair) {
  const Rational m = mediant(pair);
  return {FareyPair::from_endpoints(pair.lo(), m), FareyPair::from_endpoints(m, pair.hi())};
}

std::vector<FareyPair> farey_intervals(long order) {
  const auto seq = farey_sequence(order);
  std::vector<FareyPair> out;
  out.reserve(seq.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.push_back(FareyPair::from_endpoints(seq[i], seq[i + 1]));
  return out;
}

}  // namespace mic

#include "mic/small_values.hpp"

#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <regex>

#include "mic/lattice.hpp"

namespace mic {

Rational parse_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text);
  static const std::regex re(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d{1,5}))?)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, re) || (m[2].length() == 0 && m[3].length() == 0))
    throw ParseError("malformed decimal '" + std::string(text) + "'");
  const std::string digits = m[2].str() + m[3].str();
  BigInt num(digits, 10);
  if (m[1] == "-") num = -num;
  long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
  exponent -= static_cast<long>(m[3].length());
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? Rational(num * scale) : make_rational(num, scale);
}

namespace {

// Closed real interval [lo, hi] with outward-rounded endpoints.
class RealBox {
 public:
  explicit RealBox(mpfr_prec_t prec) {
    mpfr_inits2(prec, lo_, hi_, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  RealBox(const Rational& q, mpfr_prec_t prec) : RealBox(prec) {
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }
  RealBox(const RealBox& o) : RealBox(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  RealBox& operator=(const RealBox& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
      mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~RealBox() { mpfr_clears(lo_, hi_, static_cast<mpfr_ptr>(nullptr)); }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool below(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }
  bool disjoint(const RealBox& o) const { return mpfr_less_p(hi_, o.lo_) || mpfr_less_p(o.hi_, lo_); }

  Rational midpoint() const {
    mpfr_t mid;
    mpfr_init2(mid, prec() + 1);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    Rational q;
    mpfr_get_q(q.get_mpq_t(), mid);
    mpfr_clear(mid);
    return q;
  }
  double upper_sqrt() const {
    mpfr_t r;
    mpfr_init2(r, prec());
    mpfr_sqrt(r, hi_, MPFR_RNDU);
    const double d = mpfr_get_d(r, MPFR_RNDU);
    mpfr_clear(r);
    return d;
  }

  friend RealBox operator+(const RealBox& a, const RealBox& b) {
    RealBox r(a.prec());
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend RealBox operator-(const RealBox& a, const RealBox& b) {
    RealBox r(a.prec());
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  friend RealBox operator*(const RealBox& a, const RealBox& b) {
    RealBox r(a.prec());
    mpfr_t t;
    mpfr_init2(t, a.prec());
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_}) {
      for (mpfr_srcptr y : {b.lo_, b.hi_}) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(t);
    return r;
  }
  RealBox square() const {
    RealBox r = *this * *this;
    if (contains_zero()) mpfr_set_zero(r.lo_, 1);
    return r;
  }
  /// Requires 0 outside the interval.
  RealBox reciprocal() const {
    RealBox r(prec());
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
  }

 private:
  mpfr_t lo_, hi_;
};

struct ComplexBox {
  RealBox re;
  RealBox im;

  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  RealBox norm2() const { return re.square() + im.square(); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool disjoint(const ComplexBox& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
  /// Empty optional when the divisor box touches zero.
  std::optional<ComplexBox> divided_by(const ComplexBox& d) const {
    const RealBox n2 = d.norm2();
    if (n2.contains_zero()) return std::nullopt;
    const RealBox inv = n2.reciprocal();
    return ComplexBox{(re * d.re + im * d.im) * inv, (im * d.re - re * d.im) * inv};
  }
};

ComplexBox constant_box(const BigInt& c, mpfr_prec_t prec) { return {RealBox(Rational(c), prec), RealBox(prec)}; }

ComplexBox eval_box(const IntPoly& f, const ComplexBox& z) {
  const mpfr_prec_t prec = z.re.prec();
  ComplexBox acc{RealBox(prec), RealBox(prec)};
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * z + constant_box(*it, prec);
  return acc;
}

struct Setup {
  std::vector<ComplexBox> z;
  /// (point index, imaginary part?) for each real linear form.
  std::vector<std::pair<std::size_t, bool>> forms;
  Rational epsilon;
  mpfr_prec_t prec;
};

// Midpoints of the linear forms applied to powers[j] = z^j.
std::vector<Rational> form_values(const Setup& s, const std::vector<ComplexBox>& powers) {
  std::vector<Rational> out;
  for (const auto& [i, imag] : s.forms) out.push_back(imag ? powers[i].im.midpoint() : powers[i].re.midpoint());
  return out;
}

std::vector<std::vector<ComplexBox>> power_table(const Setup& s, std::size_t top) {
  std::vector<std::vector<ComplexBox>> table;
  std::vector<ComplexBox> cur;
  for (std::size_t i = 0; i < s.z.size(); ++i) cur.push_back(constant_box(BigInt(1), s.prec));
  for (std::size_t j = 0; j <= top; ++j) {
    table.push_back(cur);
    for (std::size_t i = 0; i < s.z.size(); ++i) cur[i] = cur[i] * s.z[i];
  }
  return table;
}

std::optional<std::vector<double>> verified_bounds(const Setup& s, const IntPoly& f) {
  const Rational eps2 = s.epsilon * s.epsilon;
  std::vector<double> out;
  for (const auto& z : s.z) {
    const RealBox n2 = eval_box(f, z).norm2();
    if (!n2.below(eps2)) return std::nullopt;
    out.push_back(n2.upper_sqrt());
  }
  return out;
}

// Solves M a = rhs with complex boxes; empty when a pivot touches zero.
std::optional<std::vector<ComplexBox>> solve_boxes(std::vector<std::vector<ComplexBox>> m, std::vector<ComplexBox> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    Rational best = -1;
    for (std::size_t r = col; r < n; ++r) {
      const Rational mag = m[r][col].norm2().midpoint();
      if (mag > best) best = mag, piv = r;
    }
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      auto f = m[r][col].divided_by(m[col][col]);
      if (!f) return std::nullopt;
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - *f * m[col][c];
      rhs[r] = rhs[r] - *f * rhs[col];
    }
  }
  std::vector<ComplexBox> a(rhs);
  for (std::size_t r = n; r-- > 0;) {
    ComplexBox acc = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) acc = acc - m[r][c] * a[c];
    auto q = acc.divided_by(m[r][r]);
    if (!q) return std::nullopt;
    a[r] = *q;
  }
  return a;
}

BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt power_of_two(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// x^n + sum_{j=1..k} floor(A_j) P^j where sum A_j P(z_i)^j = -z_i^n.
std::optional<SmallValueResult> assemble(const Setup& s, const IntPoly& p, unsigned long max_degree) {
  const std::size_t k = s.z.size();
  const unsigned long dp = p.degree().value();
  const unsigned long n = std::max<unsigned long>(k * k * (k + 1) / 2, k * dp) + 1;
  if (n > max_degree) return std::nullopt;
  std::vector<ComplexBox> vals;
  for (const auto& z : s.z) vals.push_back(eval_box(p, z));
  const auto zp = power_table(s, n);
  std::vector<std::vector<ComplexBox>> m(k);
  std::vector<ComplexBox> rhs;
  for (std::size_t i = 0; i < k; ++i) {
    ComplexBox pw = vals[i];
    for (std::size_t j = 0; j < k; ++j) {
      m[i].push_back(pw);
      pw = pw * vals[i];
    }
    rhs.push_back(constant_box(BigInt(0), s.prec) - zp[n][i]);
  }
  const auto a = solve_boxes(std::move(m), std::move(rhs));
  if (!a) return std::nullopt;
  IntPoly f = IntPoly::monomial(n);
  IntPoly pj = p;
  for (std::size_t j = 0; j < k; ++j) {
    f += pj * floor_of((*a)[j].re.midpoint());
    pj *= p;
  }
  if (f.degree().value() != n || !f.is_monic()) return std::nullopt;
  auto bounds = verified_bounds(s, f);
  if (!bounds) return std::nullopt;
  return SmallValueResult{f, n, SmallValueMethod::PowerCombination, p, std::move(*bounds)};
}

std::optional<SmallValueResult> power_combination(const Setup& s, unsigned long max_degree) {
  const std::size_t k = s.z.size();
  const Rational target = s.epsilon / static_cast<unsigned long>(k);
  const std::size_t jmax = k * (k - 1) / 2;
  const auto zp = power_table(s, k);
  const unsigned long top = std::min<unsigned long>(s.prec / 2, 240);
  for (unsigned long e = 4; e <= top; e += 4) {
    const Rational scale(power_of_two(e));
    RationalMatrix rows;
    for (std::size_t j = 0; j <= k; ++j) {
      std::vector<Rational> row(k + 1, Rational(0));
      row[j] = 1;
      for (const auto& v : form_values(s, zp[j])) row.push_back(scale * v);
      rows.push_back(std::move(row));
    }
    const ReductionResult red = lll_reduce(gram_from_vectors(rows));
    for (std::size_t col = 0; col <= k; ++col) {
      std::vector<BigInt> qc;
      for (std::size_t i = 0; i <= k; ++i) qc.push_back(red.u[i][col]);
      const IntPoly q(std::move(qc));
      if (q.is_zero()) continue;
      for (std::size_t j = 0; j <= jmax; ++j) {
        const IntPoly p = q.shifted(j);
        std::vector<ComplexBox> vals;
        bool ok = true;
        for (const auto& z : s.z) {
          vals.push_back(eval_box(p, z));
          const ComplexBox& v = vals.back();
          if (v.contains_zero() || !v.norm2().below(target * target)) ok = false;
        }
        for (std::size_t a = 0; ok && a < k; ++a)
          for (std::size_t b = a + 1; ok && b < k; ++b) ok = vals[a].disjoint(vals[b]);
        if (!ok) continue;
        if (auto r = assemble(s, p, max_degree)) return r;
      }
    }
  }
  return std::nullopt;
}

std::optional<SmallValueResult> direct_cvp(const Setup& s, unsigned long max_degree) {
  const std::size_t nforms = s.forms.size();
  const auto zp = power_table(s, max_degree);
  for (unsigned long n = 1; n <= max_degree; ++n) {
    for (unsigned long e : {8UL, 16UL, 32UL, 64UL, 128UL}) {
      if (e + 16 > static_cast<unsigned long>(s.prec)) break;
      const Rational scale(power_of_two(e));
      RationalMatrix rows;
      for (unsigned long j = 0; j < n; ++j) {
        std::vector<Rational> row(n, Rational(0));
        row[j] = 1;
        for (const auto& v : form_values(s, zp[j])) row.push_back(scale * v);
        rows.push_back(std::move(row));
      }
      std::vector<Rational> target(n, Rational(0));
      for (const auto& v : form_values(s, zp[n])) target.push_back(-scale * v);
      const ReductionResult red = lll_reduce(gram_from_vectors(rows));
      std::vector<Rational> row_dots(n);
      for (unsigned long i = 0; i < n; ++i)
        for (std::size_t t = 0; t < nforms; ++t) row_dots[i] += rows[i][n + t] * target[n + t];
      std::vector<Rational> dots(n);
      for (unsigned long j = 0; j < n; ++j)
        for (unsigned long i = 0; i < n; ++i) dots[j] += Rational(red.u[i][j]) * row_dots[i];
      const std::vector<BigInt> c = nearest_plane(red, dots);
      std::vector<BigInt> coeffs(n + 1, BigInt(0));
      coeffs[n] = 1;
      for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = 0; j < n; ++j) coeffs[i] += red.u[i][j] * c[j];
      const IntPoly f(std::move(coeffs));
      if (auto bounds = verified_bounds(s, f)) return SmallValueResult{f, n, SmallValueMethod::DirectCvp, IntPoly(), *bounds};
    }
  }
  return std::nullopt;
}

}  // namespace

SmallValueResult small_value_polynomial(const std::vector<NumericPoint>& points, const Rational& epsilon,
                                        unsigned precision, unsigned long max_degree) {
  if (points.empty()) throw DomainError("at least one point is required");
  if (sgn(epsilon) <= 0 || epsilon >= 1) throw DomainError("epsilon must lie in (0, 1)");
  if (precision < 32) throw DomainError("precision must be at least 32 bits");
  std::vector<std::pair<Rational, Rational>> exact;
  for (const auto& pt : points) exact.emplace_back(parse_decimal(pt.re), parse_decimal(pt.im));
  for (std::size_t i = 0; i < exact.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (exact[i] == exact[j]) throw DomainError("points must be pairwise distinct");
    if (sgn(exact[i].second) == 0) continue;
    const std::pair<Rational, Rational> conj{exact[i].first, -exact[i].second};
    if (std::find(exact.begin(), exact.end(), conj) == exact.end())
      throw DomainError("point set is not closed under complex conjugation");
  }

  Setup s{{}, {}, epsilon, static_cast<mpfr_prec_t>(precision)};
  for (std::size_t i = 0; i < exact.size(); ++i) {
    s.z.push_back(ComplexBox{RealBox(exact[i].first, s.prec), RealBox(exact[i].second, s.prec)});
    const int sign = sgn(exact[i].second);
    if (sign == 0) s.forms.emplace_back(i, false);
    if (sign > 0) {
      s.forms.emplace_back(i, false);
      s.forms.emplace_back(i, true);
    }
  }
  if (auto r = power_combination(s, max_degree)) return *r;
  if (auto r = direct_cvp(s, max_degree)) return *r;
  throw PrecisionError("could not verify |F| < epsilon at " + std::to_string(precision) +
                       " bits up to degree " + std::to_string(max_degree));
}

}  // namespace mic

#include "mic/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "mic/construct.hpp"

namespace mic {

namespace {

BigInt round_nearest(const Rational& x) {
  // floor(x + 1/2)
  BigInt num = 2 * x.get_num() + x.get_den();
  BigInt den = 2 * x.get_den();
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// LDL^T pivots; empty when some pivot is not positive.
std::vector<Rational> positive_pivots(RationalMatrix a) {
  const std::size_t n = a.size();
  std::vector<Rational> pivots;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) <= 0) return {};
    pivots.push_back(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return pivots;
}

struct Gso {
  RationalMatrix mu;
  std::vector<Rational> b;
};

Gso gram_schmidt(const RationalMatrix& g) {
  const std::size_t n = g.size();
  Gso out{RationalMatrix(n, std::vector<Rational>(n, Rational(0))), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational r = g[i][j];
      for (std::size_t l = 0; l < j; ++l) r -= out.mu[j][l] * out.mu[i][l] * out.b[l];
      out.mu[i][j] = r / out.b[j];
    }
    Rational bi = g[i][i];
    for (std::size_t l = 0; l < i; ++l) bi -= out.mu[i][l] * out.mu[i][l] * out.b[l];
    out.b[i] = bi;
  }
  return out;
}

}  // namespace

GramMatrix::GramMatrix(RationalMatrix entries) : g_(std::move(entries)) {
  const std::size_t n = g_.size();
  if (n == 0) throw DomainError("Gram matrix must be nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    if (g_[i].size() != n) throw DomainError("Gram matrix must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (g_[i][j] != g_[j][i]) throw DomainError("Gram matrix must be symmetric");
  }
  if (positive_pivots(g_).empty()) throw DomainError("Gram matrix is not positive definite");
}

Rational GramMatrix::determinant() const {
  Rational det = 1;
  for (const auto& p : positive_pivots(g_)) det *= p;
  return det;
}

GramMatrix gram_matrix(const std::vector<RatPoly>& polys, const Interval& iv) {
  const std::size_t n = polys.size();
  RationalMatrix g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = poly_integrate_product(polys[i], polys[j], iv);
  return GramMatrix(std::move(g));
}

GramMatrix gram_from_vectors(const RationalMatrix& rows) {
  const std::size_t n = rows.size();
  RationalMatrix g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      g[i][j] = g[j][i] = std::inner_product(rows[i].begin(), rows[i].end(), rows[j].begin(), Rational(0));
  return GramMatrix(std::move(g));
}

ReductionResult lll_reduce(const GramMatrix& input, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta >= 1) throw DomainError("delta must lie strictly between 1/4 and 1");
  const std::size_t n = input.dim();
  RationalMatrix g = input.entries();
  IntegerMatrix u(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  Gso gso = gram_schmidt(g);

  // b_k <- b_k - q b_j, keeping g, u and row k of mu consistent.
  auto size_reduce = [&](std::size_t k, std::size_t j) {
    const BigInt q = round_nearest(gso.mu[k][j]);
    if (q == 0) return;
    const Rational qr(q);
    const Rational gkk = g[k][k] - 2 * qr * g[k][j] + qr * qr * g[j][j];
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      g[k][l] -= qr * g[j][l];
      g[l][k] = g[k][l];
    }
    g[k][k] = gkk;
    for (std::size_t i = 0; i < n; ++i) u[i][k] -= q * u[i][j];
    for (std::size_t l = 0; l < j; ++l) gso.mu[k][l] -= qr * gso.mu[j][l];
    gso.mu[k][j] -= qr;
  };

  std::size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    const Rational m = gso.mu[k][k - 1];
    if (gso.b[k] >= (delta - m * m) * gso.b[k - 1]) {
      for (std::size_t j = k - 1; j-- > 0;) size_reduce(k, j);
      ++k;
      continue;
    }
    std::swap(g[k], g[k - 1]);
    for (auto& row : g) std::swap(row[k], row[k - 1]);
    for (auto& row : u) std::swap(row[k], row[k - 1]);
    gso = gram_schmidt(g);
    k = std::max<std::size_t>(k - 1, 1);
  }
  return ReductionResult{GramMatrix(std::move(g)), std::move(u), std::move(gso.mu), std::move(gso.b), delta};
}

std::vector<BigInt> nearest_plane(const ReductionResult& red, const std::vector<Rational>& target_dots) {
  const std::size_t n = red.gs_norms.size();
  if (target_dots.size() != n) throw DomainError("target has the wrong dimension");
  // ts[j] = <t, r*_j>
  std::vector<Rational> ts(n);
  for (std::size_t j = 0; j < n; ++j) {
    ts[j] = target_dots[j];
    for (std::size_t l = 0; l < j; ++l) ts[j] -= red.mu[j][l] * ts[l];
  }
  std::vector<BigInt> c(n, BigInt(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational x = ts[i] / red.gs_norms[i];
    for (std::size_t j = i + 1; j < n; ++j) x -= Rational(c[j]) * red.mu[j][i];
    c[i] = round_nearest(x);
  }
  return c;
}

SearchBasis build_search_basis(const FareyPair& pair, unsigned long n) {
  if (n < 3) throw DomainError("search degree must be at least 3");
  const IntPoly p = pair_polynomial(pair, n, BigInt(1), BigInt(1));
  const IntPoly v = IntPoly::linear(pair.b1(), -pair.a1()) * IntPoly::linear(pair.b2(), -pair.a2());
  std::vector<IntPoly> members{p};
  for (unsigned long i = 0; i + 3 <= n; ++i) members.push_back(v.shifted(i));
  return SearchBasis{pair, n, p, v, std::move(members)};
}

namespace {

struct Candidate {
  Rational norm;
  std::vector<BigInt> key;
  IntPoly poly;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.norm != b.norm) return a.norm < b.norm;
  return a.key < b.key;
}

std::size_t box_size(std::size_t dim, unsigned radius, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > cap / (2 * radius + 1)) throw LimitError("search space exceeds the candidate limit");
    total *= 2 * radius + 1;
  }
  return total;
}

// Visits every vector in [-r, r]^dim in lexicographic order.
template <class Fn>
void for_each_offset(std::size_t dim, unsigned radius, Fn&& fn) {
  const long r = radius;
  std::vector<long> o(dim, -r);
  while (true) {
    fn(o);
    std::size_t i = dim;
    while (i > 0 && o[i - 1] == r) o[--i] = -r;
    if (i == 0) return;
    ++o[i - 1];
  }
}

IntPoly combine(const std::vector<IntPoly>& basis, const IntegerMatrix& u, std::size_t col) {
  IntPoly out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (u[i][col] != 0) out += basis[i] * u[i][col];
  return out;
}

std::vector<Candidate> sublattice_candidates(const SearchBasis& sb, const SearchOptions& opt) {
  const Interval iv = sb.pair.interval();
  const std::vector<IntPoly> gens(sb.members.begin() + 1, sb.members.end());
  std::vector<RatPoly> rgens;
  for (const auto& g : gens) rgens.push_back(to_rational(g));
  const ReductionResult red = lll_reduce(gram_matrix(rgens, iv), opt.delta);
  const std::size_t d = gens.size();

  std::vector<IntPoly> reduced;
  for (std::size_t j = 0; j < d; ++j) reduced.push_back(combine(gens, red.u, j));
  const RatPoly rp = to_rational(sb.p);
  std::vector<Rational> p_dots(d);
  std::vector<Rational> target(d);
  for (std::size_t j = 0; j < d; ++j) {
    p_dots[j] = poly_integrate_product(rp, to_rational(reduced[j]), iv);
    target[j] = -p_dots[j];
  }
  const std::vector<BigInt> centre = nearest_plane(red, target);
  const Rational pp = poly_integrate_product(rp, rp, iv);

  box_size(d, opt.radius, opt.max_candidates);
  std::vector<Candidate> out;
  for_each_offset(d, opt.radius, [&](const std::vector<long>& o) {
    std::vector<BigInt> c(d);
    for (std::size_t j = 0; j < d; ++j) c[j] = centre[j] + o[j];
    // ||p + sum c_j r_j||^2 expanded through the reduced Gram form.
    Rational norm = pp;
    for (std::size_t i = 0; i < d; ++i) {
      if (c[i] == 0) continue;
      const Rational ci(c[i]);
      norm += 2 * ci * p_dots[i];
      for (std::size_t j = 0; j < d; ++j) norm += ci * Rational(c[j]) * red.gram_reduced(i, j);
    }
    std::vector<BigInt> key(o.begin(), o.end());
    out.push_back(Candidate{std::move(norm), std::move(key), IntPoly()});
    IntPoly f = sb.p;
    for (std::size_t j = 0; j < d; ++j)
      if (c[j] != 0) f += reduced[j] * c[j];
    out.back().poly = std::move(f);
  });
  return out;
}

std::vector<Candidate> full_basis_candidates(const SearchBasis& sb, const SearchOptions& opt) {
  const Interval iv = sb.pair.interval();
  std::vector<RatPoly> rm;
  for (const auto& m : sb.members) rm.push_back(to_rational(m));
  const ReductionResult red = lll_reduce(gram_matrix(rm, iv), opt.delta);
  const std::size_t d = sb.members.size();
  std::vector<IntPoly> reduced;
  for (std::size_t j = 0; j < d; ++j) reduced.push_back(combine(sb.members, red.u, j));

  box_size(d, opt.radius, opt.max_candidates);
  std::vector<Candidate> out;
  for_each_offset(d, opt.radius, [&](const std::vector<long>& o) {
    BigInt on_p = 0;
    for (std::size_t j = 0; j < d; ++j) on_p += red.u[0][j] * o[j];
    // Keep only combinations with coefficient +1 on p; -1 is the negation of
    // a vector visited elsewhere in the box.
    if (on_p != 1) return;
    Rational norm = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (o[i] != 0 && o[j] != 0) norm += Rational(o[i] * o[j]) * red.gram_reduced(i, j);
    IntPoly f;
    for (std::size_t j = 0; j < d; ++j)
      if (o[j] != 0) f += reduced[j] * BigInt(o[j]);
    out.push_back(Candidate{std::move(norm), std::vector<BigInt>(o.begin(), o.end()), std::move(f)});
  });
  return out;
}

}  // namespace

std::optional<WitnessRecord> search_witness(const FareyPair& pair, unsigned long n, const SearchOptions& options) {
  const SearchBasis sb = build_search_basis(pair, n);
  std::vector<Candidate> cands = options.strategy == SearchStrategy::SublatticeCvp
                                     ? sublattice_candidates(sb, options)
                                     : full_basis_candidates(sb, options);
  std::sort(cands.begin(), cands.end(), candidate_less);
  for (const auto& c : cands) {
    if (!c.poly.is_monic() || c.poly.degree().value() != n) continue;
    WitnessRecord rec = verify_witness(pair, c.poly, options.certify);
    if (rec.certificate.verdict == Verdict::CertifiedAtMost) return rec;
  }
  return std::nullopt;
}

}  // namespace mic

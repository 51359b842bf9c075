#include "markovplanes/abelian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mkp {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

// Bareiss elimination.
Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix p(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
    }
  return p;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}
void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  SmithForm f{IntMatrix::identity(M.rows()), M, IntMatrix::identity(M.cols())};
  IntMatrix& S = f.S;
  const std::size_t r = S.rows(), c = S.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block, first in row-major order
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (S(i, j) != 0 && (pi == r || abs(S(i, j)) < abs(S(pi, pj)))) pi = i, pj = j;
      if (pi == r) return f;
      if (pi != t) swap_rows(S, pi, t), swap_rows(f.U, pi, t);
      if (pj != t) swap_cols(S, pj, t), swap_cols(f.V, pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (S(i, t) == 0) continue;
        Int q = -tdiv(S(i, t), S(t, t));
        add_row(S, i, t, q), add_row(f.U, i, t, q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (S(t, j) == 0) continue;
        Int q = -tdiv(S(t, j), S(t, t));
        add_col(S, j, t, q), add_col(f.V, j, t, q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (S(i, j) % S(t, t) != 0) {
            add_row(S, t, i, 1), add_row(f.U, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S(t, t) < 0) negate_row(S, t), negate_row(f.U, t);
  }
  return f;
}

HermiteForm hermite_normal_form(const IntMatrix& M) {
  HermiteForm f{IntMatrix::identity(M.rows()), M};
  IntMatrix& H = f.H;
  const std::size_t r = H.rows(), c = H.cols();
  std::size_t p = 0;
  for (std::size_t j = 0; j < c && p < r; ++j) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = p; i < r; ++i)
        if (H(i, j) != 0 && (best == r || abs(H(i, j)) < abs(H(best, j)))) best = i;
      if (best == r) break;
      if (best != p) swap_rows(H, best, p), swap_rows(f.U, best, p);
      bool clean = true;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (H(i, j) == 0) continue;
        Int q = -tdiv(H(i, j), H(p, j));
        add_row(H, i, p, q), add_row(f.U, i, p, q);
        if (H(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(p, j) == 0) continue;
    if (H(p, j) < 0) negate_row(H, p), negate_row(f.U, p);
    for (std::size_t i = 0; i < p; ++i) {
      Int q = -fdiv(H(i, j), H(p, j));
      if (q != 0) add_row(H, i, p, q), add_row(f.U, i, p, q);
    }
    ++p;
  }
  return f;
}

long residue(const Int& x, long mu) {
  if (mu <= 0) throw std::invalid_argument("residue: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Int(mu).get_mpz_t());
  return r.get_si();
}

KElement k_element(const KContext& ctx, const Int& free, const Int& tors) {
  return {free, residue(tors, ctx.mu)};
}

KElement k_add(const KContext& ctx, const KElement& x, const KElement& y) {
  return {x.free + y.free, residue(Int(x.tors) + y.tors, ctx.mu)};
}

KElement k_scale(const KContext& ctx, const Int& n, const KElement& x) {
  return {n * x.free, residue(n * x.tors, ctx.mu)};
}

bool k_is_zero(const KElement& x) { return x.free == 0 && x.tors == 0; }

std::string to_string(const KElement& x) {
  std::ostringstream os;
  os << '(' << x.free << ',' << x.tors << ')';
  return os.str();
}

bool k_generates(const KContext& ctx, const KElement& x, const KElement& y) {
  Int minor = x.free * y.tors - y.free * x.tors;
  Int g = gcd(gcd(minor, ctx.mu * x.free), ctx.mu * y.free);
  return g == 1;
}

Int k_membership_multiple(const KElement& w, const KElement& q, const KContext& ctx) {
  if (q.free <= 0) throw std::invalid_argument("k_membership_multiple: q needs positive free part");
  Int n0 = q.free / gcd(w.free, q.free);
  Int beta0 = n0 * w.free / q.free;
  long r = residue(n0 * w.tors - beta0 * q.tors, ctx.mu);
  long t = ctx.mu / std::gcd(ctx.mu, r);
  return n0 * t;
}

long euler_phi(long n) {
  long count = 0;
  for (long k = 0; k < n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

std::vector<long> units_mod(long mu) {
  std::vector<long> out;
  for (long k = 0; k < mu; ++k)
    if (std::gcd(k, mu) == 1) out.push_back(k);
  return out;
}

std::vector<KAutomorphism> automorphisms(const KContext& ctx, bool positive_only) {
  std::vector<KAutomorphism> out;
  const auto units = units_mod(ctx.mu);
  for (int eps : {1, -1}) {
    if (eps < 0 && positive_only) break;
    for (long a = 0; a < ctx.mu; ++a)
      for (long c : units) out.push_back({eps, a, c});
  }
  return out;
}

KElement apply_automorphism(const KContext& ctx, const KAutomorphism& phi, const KElement& q) {
  return {phi.eps * q.free, residue(phi.a * q.free + Int(phi.c) * q.tors, ctx.mu)};
}

KAutomorphism compose(const KContext& ctx, const KAutomorphism& f, const KAutomorphism& g) {
  // f(g(k,m)) = (ef*eg*k, af*eg*k + cf*(ag*k + cg*m))
  return {f.eps * g.eps, residue(Int(f.a) * g.eps + Int(f.c) * g.a, ctx.mu),
          residue(Int(f.c) * g.c, ctx.mu)};
}

KAutomorphism inverse(const KContext& ctx, const KAutomorphism& f) {
  for (const auto& g : automorphisms(ctx, false))
    if (compose(ctx, f, g) == KAutomorphism{1, 0, residue(1, ctx.mu)}) return g;
  throw std::logic_error("inverse: automorphism not invertible");
}

Cokernel cokernel_structure(const IntMatrix& P) {
  const std::size_t r = P.rows(), n = P.cols();
  if (r + 1 != n) throw std::invalid_argument("cokernel_structure: expected an r x (r+1) matrix");
  SmithForm f = smith_normal_form(P.transposed());  // n x r
  long mu = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const Int& d = f.S(i, i);
    if (d == 0) throw std::invalid_argument("cokernel_structure: matrix is not of full rank");
    if (d == 1) continue;
    if (i + 1 != r || !d.fits_slong_p())
      throw std::invalid_argument("cokernel_structure: torsion is not cyclic of small order");
    mu = d.get_si();
  }
  Cokernel k;
  k.ctx.mu = mu;
  for (std::size_t i = 0; i < n; ++i) {
    // image of e_i: column i of U; row r is free, row r-1 carries the torsion
    Int tors = (mu > 1) ? f.U(r - 1, i) : Int(0);
    k.images.push_back(k_element(k.ctx, f.U(r, i), tors));
  }
  for (const auto& q : k.images) {
    if (q.free == 0) continue;
    if (q.free < 0)
      for (auto& e : k.images) e = apply_automorphism(k.ctx, {-1, 0, residue(1, mu)}, e);
    break;
  }
  return k;
}

IntMatrix kernel_basis(const std::vector<KElement>& q, const KContext& ctx) {
  const std::size_t n = q.size();
  IntMatrix A(2, n + 1);
  for (std::size_t i = 0; i < n; ++i) A(0, i) = q[i].free, A(1, i) = q[i].tors;
  A(1, n) = ctx.mu;
  SmithForm f = smith_normal_form(A);
  std::size_t rank = 0;
  while (rank < 2 && f.S(rank, rank) != 0) ++rank;
  IntMatrix B(n + 1 - rank, n);  // kernel vectors as rows, projected to Z^n
  for (std::size_t k = 0; k < n + 1 - rank; ++k)
    for (std::size_t i = 0; i < n; ++i) B(k, i) = f.V(i, rank + k);
  return hermite_normal_form(B).H.transposed();
}

}  // namespace mkp

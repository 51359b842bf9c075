#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mkp {

using Int = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transposed() const;
  Int determinant() const;  // square only
  std::string str() const;  // "[[1,2],[3,4]]"

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// U*M*V = S, U and V unimodular, S diagonal with d1 | d2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix U, S, V;
};
SmithForm smith_normal_form(const IntMatrix& M);

// U*M = H in row Hermite normal form (positive pivots, entries above pivots reduced).
struct HermiteForm {
  IntMatrix U, H;
};
HermiteForm hermite_normal_form(const IntMatrix& M);

// K = Z + Z/mu.
struct KContext {
  long mu = 1;
};

struct KElement {
  Int free;
  long tors = 0;  // in [0, mu)
  friend bool operator==(const KElement& x, const KElement& y) {
    return x.free == y.free && x.tors == y.tors;
  }
};

long residue(const Int& x, long mu);
KElement k_element(const KContext& ctx, const Int& free, const Int& tors);
KElement k_add(const KContext& ctx, const KElement& x, const KElement& y);
KElement k_scale(const KContext& ctx, const Int& n, const KElement& x);
bool k_is_zero(const KElement& x);
std::string to_string(const KElement& x);

// Two elements generate K.
bool k_generates(const KContext& ctx, const KElement& x, const KElement& y);

// Smallest n >= 1 with n*w in Z*q.  Requires q.free > 0.
Int k_membership_multiple(const KElement& w, const KElement& q, const KContext& ctx);

// phi(k, m) = (eps*k, a*k + c*m).
struct KAutomorphism {
  int eps = 1;
  long a = 0;
  long c = 1;
  friend bool operator==(const KAutomorphism& x, const KAutomorphism& y) {
    return x.eps == y.eps && x.a == y.a && x.c == y.c;
  }
};

long euler_phi(long n);
std::vector<long> units_mod(long mu);
std::vector<KAutomorphism> automorphisms(const KContext& ctx, bool positive_only);
KElement apply_automorphism(const KContext& ctx, const KAutomorphism& phi, const KElement& q);
KAutomorphism compose(const KContext& ctx, const KAutomorphism& f, const KAutomorphism& g);  // f after g
KAutomorphism inverse(const KContext& ctx, const KAutomorphism& f);

// Cokernel of P^T : Z^r -> Z^n, i.e. Z^n modulo the row space of P.  The
// cokernel must be Z + Z/mu; images of the standard basis are returned with
// the first nonzero free part positive.  Throws std::invalid_argument otherwise.
struct Cokernel {
  KContext ctx;
  std::vector<KElement> images;
};
Cokernel cokernel_structure(const IntMatrix& P);

// Z-basis (as columns, n x (n-1)) of the kernel of Z^n -> K, e_i -> q[i],
// in Hermite normal form after transposition.
IntMatrix kernel_basis(const std::vector<KElement>& q, const KContext& ctx);

}  // namespace mkp

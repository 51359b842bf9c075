#pragma once

// Brute-force reference computations.  Deliberately naive: they share no code
// with the library beyond the basic types.

#include <algorithm>
#include <cmath>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "markovplanes/adjacency.hpp"
#include "markovplanes/fwpp.hpp"
#include "markovplanes/markov.hpp"

namespace oracle {

using mkp::Int;
using mkp::Triple;

// All ascending solutions with u0+u1+u2 <= bound: for each (u0, u1) the
// equation is a monic quadratic in u2.
inline std::vector<Triple> solutions(long a, long bound) {
  using i128 = __int128;
  std::vector<Triple> out;
  for (long u0 = 1; 3 * u0 <= bound; ++u0)
    for (long u1 = u0; u0 + 2 * u1 <= bound; ++u1) {
      // u2^2 - p u2 + s^2 = 0 with s = u0 + u1, p = a u0 u1 - 2s
      const i128 s = u0 + u1, p = i128(a) * u0 * u1 - 2 * s;
      const i128 disc = p * p - 4 * s * s;
      if (disc < 0) continue;
      i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(disc)));
      while (r * r > disc) --r;
      while ((r + 1) * (r + 1) <= disc) ++r;
      if (r * r != disc) continue;
      for (i128 num : {p - r, p + r}) {
        if (num <= 0 || num % 2 != 0) continue;
        const i128 u2 = num / 2;
        if (u2 < u1 || s + u2 > bound) continue;
        Triple t{Int(u0), Int(u1), Int(static_cast<long>(u2))};
        if (out.empty() || out.back() != t) out.push_back(t);
      }
    }
  std::sort(out.begin(), out.end(), mkp::norm_less);
  return out;
}

// Ascending solutions that have no ascending neighbour of smaller norm, by
// scanning all triples with entries up to `limit`.
inline std::vector<Triple> initial_triples(long a, long limit) {
  std::vector<Triple> out;
  for (long u0 = 1; u0 <= limit; ++u0)
    for (long u1 = u0; u1 <= limit; ++u1)
      for (long u2 = u1; u2 <= limit; ++u2) {
        Int s = u0 + u1 + u2;
        if (s * s != Int(a) * u0 * u1 * u2) continue;
        Int other = Int(a) * u0 * u1 - 2 * u0 - 2 * u1 - u2;  // second root for the last slot
        if (other >= u2) out.push_back({Int(u0), Int(u1), Int(u2)});
      }
  return out;
}

// Smallest n >= 1 with n * (sum of columns) in the subgroup generated by
// column k, i.e. the order of the anticanonical class in K / <q_k>.
inline Int group_iota(const mkp::DegreeMatrix& Q, int k) {
  const long mu = Q.mu();
  const Int W = Q.q[0].free + Q.q[1].free + Q.q[2].free;
  const long T = (Q.q[0].tors + Q.q[1].tors + Q.q[2].tors) % mu;
  const Int& uk = Q.q[k].free;
  const Int cl = mu * uk;
  for (Int n = 1; n <= cl; ++n) {
    if ((n * W) % uk != 0) continue;
    Int m = n * W / uk;
    Int t = m * Q.q[k].tors - n * T;
    if (Int(t % mu) == 0) return n;
  }
  return 0;
}

// Smallest n >= 1 such that some integral linear form takes the value n on
// both generators of the cone.
inline Int cone_iota(const mkp::Vec2& v, const mkp::Vec2& w) {
  Int det = v[0] * w[1] - v[1] * w[0];
  Int ad = abs(det);
  for (Int n = 1; n <= ad; ++n) {
    if ((n * (w[1] - v[1])) % det == 0 && (n * (v[0] - w[0])) % det == 0) return n;
  }
  return 0;
}

// Z(P) iso Z(P') iff P' = A * P * (column permutation) with A in GL(2, Z).
inline bool generator_isomorphic(const mkp::IntMatrix& P, const mkp::IntMatrix& R) {
  std::array<int, 3> p{0, 1, 2};
  do {
    // A * P[:, p0 p1] = R[:, 0 1]
    Int a = P(0, p[0]), b = P(0, p[1]), c = P(1, p[0]), d = P(1, p[1]);
    Int det = a * d - b * c;
    if (det == 0) continue;
    // inverse * det = [[d, -b], [-c, a]]
    Int A[2][2];
    bool integral = true;
    for (int r = 0; r < 2; ++r) {
      Int x = R(r, 0), y = R(r, 1);
      Int n0 = x * d - y * c, n1 = -x * b + y * a;
      if (n0 % det != 0 || n1 % det != 0) integral = false;
      A[r][0] = n0 / det, A[r][1] = n1 / det;
    }
    if (!integral) continue;
    Int dA = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    if (dA != 1 && dA != -1) continue;
    bool third = true;
    for (int r = 0; r < 2; ++r)
      if (A[r][0] * P(0, p[2]) + A[r][1] * P(1, p[2]) != R(r, 2)) third = false;
    if (third) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Continued fraction value b1 - 1/(b2 - 1/(...)) as a reduced fraction.
inline mpq_class hj_value(const std::vector<Int>& b) {
  mpq_class v = mpq_class(b.back());
  for (std::size_t i = b.size() - 1; i-- > 0;) {
    v = mpq_class(b[i]) - 1 / v;
    v.canonicalize();
  }
  return v;
}

// Every degree matrix with first row u (any order), 0 <= eta < mu, pairwise
// generating columns and the given integral degree.
inline std::vector<mkp::DegreeMatrix> all_degree_matrices(long a, long mu, long norm_bound) {
  std::vector<mkp::DegreeMatrix> out;
  for (long u0 = 1; u0 <= norm_bound; ++u0)
    for (long u1 = 1; u0 + u1 <= norm_bound; ++u1)
      for (long u2 = 1; u0 + u1 + u2 <= norm_bound; ++u2) {
        if (mu * (u0 + u1 + u2) > norm_bound) continue;
        Int s = u0 + u1 + u2;
        if (s * s != Int(a) * mu * u0 * u1 * u2) continue;
        for (long e0 = 0; e0 < mu; ++e0)
          for (long e1 = 0; e1 < mu; ++e1)
            for (long e2 = 0; e2 < mu; ++e2) {
              auto Q = mkp::make_degree_matrix(mu, {Int(u0), Int(u1), Int(u2)}, {e0, e1, e2});
              if (mkp::is_degree_matrix(Q)) out.push_back(Q);
            }
      }
  return out;
}

// Number of isomorphy classes, compared through generator matrices.
inline std::size_t count_classes(const std::vector<mkp::DegreeMatrix>& qs) {
  std::vector<mkp::IntMatrix> reps;
  for (const auto& Q : qs) {
    mkp::IntMatrix P = mkp::generator_matrix_of(Q);
    bool found = false;
    for (const auto& R : reps)
      if (generator_isomorphic(R, P)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(P);
  }
  return reps.size();
}

inline mkp::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  mkp::IntMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = d(rng);
  return M;
}

}  // namespace oracle

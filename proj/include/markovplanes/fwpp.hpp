#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "markovplanes/abelian.hpp"
#include "markovplanes/markov.hpp"

namespace mkp {

using Rational = mpq_class;
using Vec2 = std::array<Int, 2>;

// Three columns q_i = (u_i, eta_i) in K = Z + Z/mu.
struct DegreeMatrix {
  KContext ctx;
  std::array<KElement, 3> q;

  long mu() const { return ctx.mu; }
  Triple u() const { return {q[0].free, q[1].free, q[2].free}; }
  std::array<long, 3> eta() const { return {q[0].tors, q[1].tors, q[2].tors}; }
  friend bool operator==(const DegreeMatrix& x, const DegreeMatrix& y) {
    return x.ctx.mu == y.ctx.mu && x.q == y.q;
  }
};

DegreeMatrix make_degree_matrix(long mu, const Triple& u, const std::array<long, 3>& eta);
DegreeMatrix permute_columns(const DegreeMatrix& Q, const Perm& p);  // column i <- column p[i]
std::string to_string(const DegreeMatrix& Q);  // "[[1,1,2],[0,1,3]]/8"
// Positive free parts and pairwise generating columns.
bool is_degree_matrix(const DegreeMatrix& Q);
// Ordering by (norm of weights, mu, u, eta).
bool canonical_less(const DegreeMatrix& x, const DegreeMatrix& y);

// 2x3, primitive pairwise distinct columns spanning the plane positively.
bool is_generator_matrix(const IntMatrix& P);
Vec2 column(const IntMatrix& P, std::size_t j);

Triple fake_weights(const IntMatrix& P);
Triple fake_weights(const DegreeMatrix& Q);
Rational degree(const Triple& w);
std::optional<long> integral_degree(const Triple& w);

DegreeMatrix degree_matrix_of(const IntMatrix& P);     // throws std::invalid_argument
IntMatrix generator_matrix_of(const DegreeMatrix& Q);  // Hermite normal form representative
// Equal fake weights and Q annihilates the rows of P.
bool corresponds(const IntMatrix& P, const DegreeMatrix& Q);

KElement anticanonical_class(const DegreeMatrix& Q);
Int local_class_group_order(const DegreeMatrix& Q, int k);
Int local_gorenstein_index(const DegreeMatrix& Q, int k);

struct TCheck {
  bool is_t = false;
  Int d;  // cl / iota^2 when is_t
};
TCheck is_t_singular(const DegreeMatrix& Q, int k);

// [[iota, iota], [d*iota + b, b]]; requires gcd(b, iota) = 1.
IntMatrix t_singular_chart(const Int& iota, const Int& d, const Int& b);

Int cone_gorenstein_index(const Vec2& v, const Vec2& w);
// Hirzebruch-Jung expansion m/k = b1 - 1/(b2 - ...), 0 < k < m coprime.
std::vector<Int> hirzebruch_jung(const Int& m, const Int& k);
// (m, k) with cone(v, w) equivalent to cone(e2, m*e1 - k*e2), 0 <= k < m.
std::pair<Int, Int> cone_type(const Vec2& v, const Vec2& w);
std::size_t resolution_curve_count(const Vec2& v, const Vec2& w);

struct PointReport {
  Int cl, iota, d;
  bool is_t = false;
  std::size_t res_curves = 0;
};
struct SingularityReport {
  std::array<PointReport, 3> points;
  bool at_most_t() const {
    return points[0].is_t && points[1].is_t && points[2].is_t;
  }
};
SingularityReport singularity_report(const DegreeMatrix& Q);

struct IsoWitness {
  KAutomorphism phi;
  Perm perm;  // Q' column i = phi(Q column perm[i])
};
std::optional<IsoWitness> find_isomorphism(const DegreeMatrix& Q, const DegreeMatrix& Q2);
bool is_isomorphic(const DegreeMatrix& Q, const DegreeMatrix& Q2);

struct Adjusted {
  DegreeMatrix Q;
  IsoWitness transform;  // maps the input to Q
};
// Canonical adjusted representative: adjusted column order, second row
// (0,1,eta), minimal (u, eta) among all choices.  Throws std::invalid_argument
// for non-integral degree.
Adjusted adjust(const DegreeMatrix& Q);
bool is_adjusted(const DegreeMatrix& Q);

struct SeriesId {
  long a = 0, mu = 1, eta = 0;
  std::string str() const;
  friend auto operator<=>(const SeriesId&, const SeriesId&) = default;
};
SeriesId series_id(const DegreeMatrix& Q);  // throws if Q is not adjusted

struct Classified {
  SeriesId id;
  DegreeMatrix Q;
  std::vector<long> merged_eta;  // all eta with (u; 0,1,eta) in this class
};

struct ClassifyOptions {
  std::size_t max_nodes = 0;
  unsigned jobs = 1;
};
// Every adjusted degree matrix of degree a with weight norm <= norm_bound.
std::vector<Classified> classify(long a, const Int& norm_bound, const ClassifyOptions& opt = {});

}  // namespace mkp

#include "markovplanes/fwpp.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "markovplanes/parallel.hpp"

namespace mkp {

namespace {

constexpr Perm kPerms[6] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

Int det2(const Vec2& v, const Vec2& w) { return v[0] * w[1] - v[1] * w[0]; }

// D_i = det(v_{i+1}, v_{i+2}), indices mod 3; sum D_i v_i = 0.
std::array<Int, 3> signed_minors(const IntMatrix& P) {
  return {det2(column(P, 1), column(P, 2)), det2(column(P, 2), column(P, 0)),
          det2(column(P, 0), column(P, 1))};
}

}  // namespace

DegreeMatrix make_degree_matrix(long mu, const Triple& u, const std::array<long, 3>& eta) {
  if (mu < 1) throw std::invalid_argument("degree matrix: mu must be positive");
  DegreeMatrix Q;
  Q.ctx.mu = mu;
  for (int i = 0; i < 3; ++i) Q.q[i] = k_element(Q.ctx, u[i], eta[i]);
  return Q;
}

DegreeMatrix permute_columns(const DegreeMatrix& Q, const Perm& p) {
  DegreeMatrix R = Q;
  for (int i = 0; i < 3; ++i) R.q[i] = Q.q[p[i]];
  return R;
}

std::string to_string(const DegreeMatrix& Q) {
  std::ostringstream os;
  os << "[[" << Q.q[0].free << ',' << Q.q[1].free << ',' << Q.q[2].free << "],[" << Q.q[0].tors
     << ',' << Q.q[1].tors << ',' << Q.q[2].tors << "]]/" << Q.mu();
  return os.str();
}

bool is_degree_matrix(const DegreeMatrix& Q) {
  if (Q.mu() < 1) return false;
  for (const auto& q : Q.q)
    if (q.free <= 0 || q.tors < 0 || q.tors >= Q.mu()) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!k_generates(Q.ctx, Q.q[i], Q.q[j])) return false;
  return true;
}

bool canonical_less(const DegreeMatrix& x, const DegreeMatrix& y) {
  auto key = [](const DegreeMatrix& Q) {
    return std::make_tuple(Int(Q.mu() * norm(Q.u())), Q.mu(), Q.u(), Q.eta());
  };
  return key(x) < key(y);
}

Vec2 column(const IntMatrix& P, std::size_t j) { return {P(0, j), P(1, j)}; }

bool is_generator_matrix(const IntMatrix& P) {
  if (P.rows() != 2 || P.cols() != 3) return false;
  for (std::size_t j = 0; j < 3; ++j)
    if (gcd(P(0, j), P(1, j)) != 1) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (column(P, i) == column(P, j)) return false;
  auto D = signed_minors(P);
  int s = sgn(D[0]);
  return s != 0 && sgn(D[1]) == s && sgn(D[2]) == s;
}

Triple fake_weights(const IntMatrix& P) {
  if (P.rows() != 2 || P.cols() != 3) throw std::invalid_argument("fake_weights: expected 2x3");
  auto D = signed_minors(P);
  return {abs(D[0]), abs(D[1]), abs(D[2])};
}

Triple fake_weights(const DegreeMatrix& Q) {
  return {Q.mu() * Q.q[0].free, Q.mu() * Q.q[1].free, Q.mu() * Q.q[2].free};
}

Rational degree(const Triple& w) {
  Int s = norm(w);
  Rational r(s * s, w[0] * w[1] * w[2]);
  r.canonicalize();
  return r;
}

std::optional<long> integral_degree(const Triple& w) {
  for (const auto& x : w)
    if (x <= 0) return std::nullopt;
  Rational r = degree(w);
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) return std::nullopt;
  return r.get_num().get_si();
}

DegreeMatrix degree_matrix_of(const IntMatrix& P) {
  if (!is_generator_matrix(P))
    throw std::invalid_argument("degree_matrix_of: " + P.str() + " is not a generator matrix");
  Cokernel c = cokernel_structure(P);
  DegreeMatrix Q;
  Q.ctx = c.ctx;
  for (int i = 0; i < 3; ++i) Q.q[i] = c.images[i];
  if (!is_degree_matrix(Q)) throw std::logic_error("degree_matrix_of: degenerate cokernel");
  return Q;
}

IntMatrix generator_matrix_of(const DegreeMatrix& Q) {
  if (!is_degree_matrix(Q))
    throw std::invalid_argument("generator_matrix_of: " + to_string(Q) + " is not a degree matrix");
  IntMatrix P = kernel_basis({Q.q[0], Q.q[1], Q.q[2]}, Q.ctx).transposed();
  if (!is_generator_matrix(P)) throw std::logic_error("generator_matrix_of: bad kernel " + P.str());
  return P;
}

bool corresponds(const IntMatrix& P, const DegreeMatrix& Q) {
  if (!is_generator_matrix(P) || !is_degree_matrix(Q)) return false;
  if (fake_weights(P) != fake_weights(Q)) return false;
  for (std::size_t r = 0; r < 2; ++r) {
    KElement s{0, 0};
    for (std::size_t j = 0; j < 3; ++j) s = k_add(Q.ctx, s, k_scale(Q.ctx, P(r, j), Q.q[j]));
    if (!k_is_zero(s)) return false;
  }
  return true;
}

KElement anticanonical_class(const DegreeMatrix& Q) {
  return k_add(Q.ctx, k_add(Q.ctx, Q.q[0], Q.q[1]), Q.q[2]);
}

Int local_class_group_order(const DegreeMatrix& Q, int k) { return Q.mu() * Q.q.at(k).free; }

Int local_gorenstein_index(const DegreeMatrix& Q, int k) {
  return k_membership_multiple(anticanonical_class(Q), Q.q.at(k), Q.ctx);
}

TCheck is_t_singular(const DegreeMatrix& Q, int k) {
  Int cl = local_class_group_order(Q, k);
  Int iota = local_gorenstein_index(Q, k);
  Int sq = iota * iota;
  if (cl % sq != 0) return {false, 0};
  return {true, cl / sq};
}

IntMatrix t_singular_chart(const Int& iota, const Int& d, const Int& b) {
  if (iota <= 0 || d <= 0) throw std::invalid_argument("t_singular_chart: iota and d must be positive");
  if (gcd(b, iota) != 1) throw std::invalid_argument("t_singular_chart: gcd(b, iota) must be 1");
  IntMatrix C(2, 2);
  C(0, 0) = iota, C(0, 1) = iota;
  C(1, 0) = d * iota + b, C(1, 1) = b;
  return C;
}

Int cone_gorenstein_index(const Vec2& v, const Vec2& w) {
  Int det = det2(v, w);
  if (det == 0) throw std::invalid_argument("cone_gorenstein_index: collinear vectors");
  // v = (a,c), w = (b,d): |ad - bc| / gcd(c - d, b - a)
  return abs(det) / gcd(v[1] - w[1], w[0] - v[0]);
}

std::vector<Int> hirzebruch_jung(const Int& m, const Int& k) {
  if (m <= 1) return {};
  if (k <= 0 || k >= m || gcd(m, k) != 1)
    throw std::invalid_argument("hirzebruch_jung: need 0 < k < m coprime");
  std::vector<Int> b;
  Int x = m, y = k;
  while (y != 0) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    b.push_back(c);
    Int next = c * y - x;
    x = y;
    y = next;
  }
  return b;
}

std::pair<Int, Int> cone_type(const Vec2& v, const Vec2& w) {
  Int m = abs(det2(v, w));
  if (m == 0) throw std::invalid_argument("cone_type: collinear vectors");
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
  if (g != 1) throw std::invalid_argument("cone_type: first vector not primitive");
  // A = [[-v1, v0], [s, t]] sends v to e2
  Int y = s * w[0] + t * w[1];
  Int k;
  mpz_fdiv_r(k.get_mpz_t(), Int(-y).get_mpz_t(), m.get_mpz_t());
  return {m, k};
}

std::size_t resolution_curve_count(const Vec2& v, const Vec2& w) {
  auto [m, k] = cone_type(v, w);
  return hirzebruch_jung(m, k).size();
}

SingularityReport singularity_report(const DegreeMatrix& Q) {
  IntMatrix P = generator_matrix_of(Q);
  SingularityReport rep;
  for (int k = 0; k < 3; ++k) {
    PointReport& p = rep.points[k];
    p.cl = local_class_group_order(Q, k);
    p.iota = local_gorenstein_index(Q, k);
    TCheck t = is_t_singular(Q, k);
    p.is_t = t.is_t;
    p.d = t.d;
    p.res_curves = resolution_curve_count(column(P, (k + 1) % 3), column(P, (k + 2) % 3));
  }
  return rep;
}

std::optional<IsoWitness> find_isomorphism(const DegreeMatrix& Q, const DegreeMatrix& Q2) {
  if (Q.mu() != Q2.mu()) return std::nullopt;
  if (sorted(Q.u()) != sorted(Q2.u())) return std::nullopt;
  const auto auts = automorphisms(Q.ctx, false);
  for (const auto& p : kPerms) {
    for (const auto& phi : auts) {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) ok = apply_automorphism(Q.ctx, phi, Q.q[p[i]]) == Q2.q[i];
      if (ok) return IsoWitness{phi, p};
    }
  }
  return std::nullopt;
}

bool is_isomorphic(const DegreeMatrix& Q, const DegreeMatrix& Q2) {
  return find_isomorphism(Q, Q2).has_value();
}

Adjusted adjust(const DegreeMatrix& Q) {
  if (!is_degree_matrix(Q))
    throw std::invalid_argument("adjust: " + to_string(Q) + " is not a degree matrix");
  auto a = integral_degree(fake_weights(Q));
  if (!a) throw std::invalid_argument("adjust: " + to_string(Q) + " has non-integral degree");
  const long ar = *a * Q.mu();
  if (!is_reduced_parameter(ar))
    throw std::invalid_argument("adjust: unexpected torsion order for " + to_string(Q));

  std::optional<Adjusted> best;
  const long one = residue(1, Q.mu());
  for (const auto& p : kPerms) {
    if (!is_adjusted(permuted(Q.u(), p), ar)) continue;
    for (const auto& phi : automorphisms(Q.ctx, true)) {
      DegreeMatrix R = Q;
      for (int i = 0; i < 3; ++i) R.q[i] = apply_automorphism(Q.ctx, phi, Q.q[p[i]]);
      if (R.q[0].tors != 0 || R.q[1].tors != one) continue;
      if (!best || std::make_pair(R.u(), R.q[2].tors) < std::make_pair(best->Q.u(), best->Q.q[2].tors))
        best = Adjusted{R, {phi, p}};
    }
  }
  if (!best) throw std::logic_error("adjust: no normal form for " + to_string(Q));
  return *best;
}

bool is_adjusted(const DegreeMatrix& Q) {
  if (!is_degree_matrix(Q) || !integral_degree(fake_weights(Q))) return false;
  try {
    return adjust(Q).Q == Q;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string SeriesId::str() const {
  return std::to_string(a) + "-" + std::to_string(mu) + "-" + std::to_string(eta);
}

SeriesId series_id(const DegreeMatrix& Q) {
  if (!is_adjusted(Q)) throw std::invalid_argument("series_id: " + to_string(Q) + " is not adjusted");
  return {*integral_degree(fake_weights(Q)), Q.mu(), Q.mu() == 1 ? 0 : Q.q[2].tors};
}

std::vector<Classified> classify(long a, const Int& norm_bound, const ClassifyOptions& opt) {
  if (a <= 0) throw std::invalid_argument("classify: degree must be positive");
  std::vector<Classified> out;
  for (long mu = 1; mu <= 9; ++mu) {
    const long ar = mu * a;
    if (!is_reduced_parameter(ar)) continue;
    Int ubound = norm_bound / mu;
    MutationTree tree = enumerate_tree(ar, ubound, {opt.max_nodes, std::nullopt});

    std::vector<std::vector<std::pair<DegreeMatrix, long>>> found(tree.nodes.size());
    parallel_for(tree.nodes.size(), opt.jobs, [&](std::size_t n) {
      Triple u = permuted(tree.nodes[n], adjusted_permutation(tree.nodes[n], ar));
      for (long eta = (mu == 1 ? 0 : 1); eta < std::max(mu, 1L); ++eta) {
        DegreeMatrix Q = make_degree_matrix(mu, u, {0, 1, eta});
        if (!is_degree_matrix(Q)) continue;
        found[n].emplace_back(adjust(Q).Q, eta);
      }
    });

    std::map<std::tuple<Triple, long>, Classified> classes;
    for (const auto& per_node : found)
      for (const auto& [Q, eta] : per_node) {
        auto key = std::make_tuple(Q.u(), Q.q[2].tors);
        auto it = classes.find(key);
        if (it == classes.end())
          it = classes.emplace(key, Classified{{a, mu, mu == 1 ? 0 : Q.q[2].tors}, Q, {}}).first;
        it->second.merged_eta.push_back(eta);
      }
    for (auto& [key, c] : classes) {
      if (integral_degree(fake_weights(c.Q)) != a)
        throw std::logic_error("classify: degree mismatch for " + to_string(c.Q));
      std::sort(c.merged_eta.begin(), c.merged_eta.end());
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Classified& x, const Classified& y) { return canonical_less(x.Q, y.Q); });
  return out;
}

}  // namespace mkp

#include "markovplanes/adjacency.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "markovplanes/parallel.hpp"

namespace mkp {

bool is_valid(const KStarData& k) {
  if (k.l1 < 1 || k.l2 < 1) return false;
  if (gcd(k.l1, k.d1) != 1 || gcd(k.l2, k.d2) != 1) return false;
  Int s = k.d1 * k.l2 + k.l1 * k.d2;
  return s > 0 && k.d0 * k.l1 * k.l2 + s < 0;
}

bool is_normalized(const KStarData& k) {
  return is_valid(k) && 1 <= k.d1 && k.d1 <= k.l1 && k.l1 <= k.l2;
}

KStarData normalized(const KStarData& k) {
  if (!is_valid(k)) throw std::invalid_argument("normalized: invalid K*-surface data");
  KStarData r = k;
  if (r.l1 > r.l2) std::swap(r.l1, r.l2), std::swap(r.d1, r.d2);
  Int t;  // smallest t with d1 + t*l1 >= 1
  Int num = 1 - r.d1;
  mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), r.l1.get_mpz_t());
  r.d1 += t * r.l1;
  r.d2 -= t * r.l2;
  return r;
}

IntMatrix assemble_3x4(const KStarData& k) {
  if (!is_valid(k)) throw std::invalid_argument("assemble_3x4: invalid K*-surface data");
  IntMatrix P(3, 4);
  P(0, 0) = -1, P(0, 1) = -1, P(0, 2) = k.l1, P(0, 3) = 0;
  P(1, 0) = -1, P(1, 1) = -1, P(1, 2) = 0, P(1, 3) = k.l2;
  P(2, 0) = 0, P(2, 1) = k.d0, P(2, 2) = k.d1, P(2, 3) = k.d2;
  return P;
}

std::array<Int, 4> kstar_weights(const KStarData& k) {
  return {-k.l1 * k.l2 * k.d0 - k.l2 * k.d1 - k.l1 * k.d2, k.l2 * k.d1 + k.l1 * k.d2, -k.l2 * k.d0,
          -k.l1 * k.d0};
}

Rational kstar_degree(const KStarData& k) {
  auto w = kstar_weights(k);
  Rational r = (Rational(1, 1) / Rational(w[0]) + Rational(1, 1) / Rational(w[1])) *
               (Rational(2) + Rational(k.l1, k.l2) + Rational(k.l2, k.l1));
  r.canonicalize();
  return r;
}

std::array<Int, 3> kstar_fixed_point_orders(const KStarData& k) {
  auto w = kstar_weights(k);
  return {-k.d0, w[1], w[0]};
}

Slices slice_matrices(const KStarData& k) {
  if (!is_valid(k)) throw std::invalid_argument("slice_matrices: invalid K*-surface data");
  Slices s{IntMatrix(2, 3), IntMatrix(2, 3)};
  s.P1(0, 0) = k.l1, s.P1(0, 1) = k.l1, s.P1(0, 2) = -k.l2;
  s.P1(1, 0) = k.d1, s.P1(1, 1) = k.d1 + k.l1 * k.d0, s.P1(1, 2) = k.d2;
  s.P2(0, 0) = k.l2, s.P2(0, 1) = k.l2, s.P2(0, 2) = -k.l1;
  s.P2(1, 0) = k.d2, s.P2(1, 1) = k.d2 + k.l2 * k.d0, s.P2(1, 2) = k.d1;
  return s;
}

AdjacentPair adjacent_partner(const DegreeMatrix& Q1, int slot) {
  if (!is_degree_matrix(Q1))
    throw std::invalid_argument("adjacent_partner: " + to_string(Q1) + " is not a degree matrix");
  if (slot < 0 || slot > 2) throw std::invalid_argument("adjacent_partner: slot out of range");
  const auto a = integral_degree(fake_weights(Q1));
  if (!a) throw std::invalid_argument("adjacent_partner: degree is not integral");

  Perm frame{};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (i != slot) frame[n++] = i;
  const Triple w0 = fake_weights(Q1);
  if (w0[frame[1]] < w0[frame[0]]) std::swap(frame[0], frame[1]);
  frame[2] = slot;
  const DegreeMatrix Qf = permute_columns(Q1, frame);
  const Triple w = permuted(w0, frame);

  if (!is_t_singular(Qf, 2).is_t)
    throw std::invalid_argument("adjacent_partner: z(" + std::to_string(slot) + ") of " +
                                to_string(Q1) + " is not T-singular");
  KStarData k;
  k.l1 = local_gorenstein_index(Qf, 2);
  k.d0 = -w[2] / (k.l1 * k.l1);
  Int num = k.l1 * (w[0] + w[1]);
  if (num % w[2] != 0) throw std::logic_error("adjacent_partner: l2 is not integral");
  k.l2 = num / w[2];

  std::vector<KStarData> hits;
  for (Int d1 = 0; d1 < k.l1; ++d1) {
    if (gcd(k.l1, d1) != 1) continue;
    Int dn = -(d1 * (w[0] + w[1]) + k.d0 * k.l1 * w[1]);
    if (dn % w[2] != 0) continue;
    KStarData c = k;
    c.d1 = d1;
    c.d2 = dn / w[2];
    if (gcd(c.l2, c.d2) != 1) continue;
    if (corresponds(slice_matrices(c).P1, Qf)) hits.push_back(c);
  }
  if (hits.size() != 1)
    throw std::logic_error("adjacent_partner: expected one slice for " + to_string(Q1) + ", found " +
                           std::to_string(hits.size()));
  k = hits.front();
  if (!is_valid(k)) throw std::logic_error("adjacent_partner: slope conditions fail");

  AdjacentPair pr;
  pr.kstar = k;
  pr.frame = frame;
  pr.slot = slot;
  Slices s = slice_matrices(k);
  pr.P1 = s.P1;
  pr.P2 = s.P2;
  if (!is_generator_matrix(s.P2)) throw std::logic_error("adjacent_partner: bad partner slice");
  const Triple w2 = fake_weights(s.P2);
  if (w2 != Triple{w[0], w[1], -k.d0 * k.l2 * k.l2} || w2 != mutate(w, *a))
    throw std::logic_error("adjacent_partner: partner weights are not the mutation");
  pr.Q1 = adjust(Q1).Q;
  pr.Q2 = adjust(degree_matrix_of(s.P2)).Q;
  pr.ordered = k.l1 <= k.l2;
  pr.non_toric = k.l1 >= 2 && k.l2 >= 2;
  pr.self_adjacent = pr.Q1 == pr.Q2;
  return pr;
}

bool can_degenerate(const DegreeMatrix& Q, int slot) {
  if (!is_t_singular(Q, slot).is_t) return false;
  Int iota = local_gorenstein_index(Q, slot);
  if (iota <= 1) return false;
  Triple w = fake_weights(Q);
  return iota * norm(w) > (iota + 1) * w[slot];
}

Neighbors adjacency_neighbors(const DegreeMatrix& Q) {
  Neighbors nb;
  const DegreeMatrix self = adjust(Q).Q;
  for (int slot = 0; slot < 3; ++slot) {
    if (!is_t_singular(Q, slot).is_t) continue;
    nb.pairs.push_back(adjacent_partner(Q, slot));
    const AdjacentPair& p = nb.pairs.back();
    if (p.Q2 == self) {
      nb.self_adjacent = true;
      nb.self_adjacent_non_toric = nb.self_adjacent_non_toric || p.non_toric;
      continue;
    }
    if (std::find(nb.partners.begin(), nb.partners.end(), p.Q2) == nb.partners.end()) {
      nb.partners.push_back(p.Q2);
      nb.partner_pair.push_back(nb.pairs.size() - 1);
    }
  }
  return nb;
}

std::string GraphNode::label() const {
  std::ostringstream os;
  os << '(' << Q.q[0].free << ',' << Q.q[1].free << ',' << Q.q[2].free << "; " << Q.q[2].tors << ')';
  return os.str();
}

AdjacencyGraph adjacency_graph(long a, long mu, const Int& norm_bound, const GraphOptions& opt) {
  if (a <= 0 || mu <= 0 || !is_reduced_parameter(a * mu))
    throw std::invalid_argument("adjacency_graph: no fake weighted projective planes with degree " +
                                std::to_string(a) + " and torsion order " + std::to_string(mu));
  AdjacencyGraph g;
  g.a = a;
  g.mu = mu;
  g.norm_bound = norm_bound;
  g.scope = opt.scope;

  for (auto& c : classify(a, norm_bound, {opt.max_nodes, opt.jobs})) {
    if (c.id.mu != mu) continue;
    GraphNode node{c.Q, c.id, c.merged_eta, true, false};
    for (int k = 0; k < 3; ++k) node.at_most_t = node.at_most_t && is_t_singular(c.Q, k).is_t;
    if (opt.scope == GraphScope::AtMostT && !node.at_most_t) continue;
    g.nodes.push_back(std::move(node));
  }
  std::map<std::tuple<Triple, long>, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    index.emplace(std::make_tuple(g.nodes[i].Q.u(), g.nodes[i].Q.q[2].tors), i);

  std::vector<Neighbors> nbs(g.nodes.size());
  parallel_for(g.nodes.size(), opt.jobs, [&](std::size_t i) { nbs[i] = adjacency_neighbors(g.nodes[i].Q); });

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (nbs[i].self_adjacent) {
      g.nodes[i].self_adjacent = true;
      g.self_adjacent.push_back(i);
    }
    for (const auto& P : nbs[i].partners) {
      auto it = index.find(std::make_tuple(P.u(), P.q[2].tors));
      if (it == index.end()) continue;
      std::size_t j = it->second;
      auto e = std::make_pair(std::min(i, j), std::max(i, j));
      if (!seen.insert(e).second) continue;
      const auto& x = g.nodes[e.first].merged_eta;
      const auto& y = g.nodes[e.second].merged_eta;
      bool shared = std::any_of(x.begin(), x.end(),
                                [&](long t) { return std::find(y.begin(), y.end(), t) != y.end(); });
      g.edges.push_back({e.first, e.second, !shared});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GraphEdge& x, const GraphEdge& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
  return g;
}

Census self_adjacency_census() {
  Census c;
  for (long a : kSolvableA) {
    for (const auto& cl : classify(a, 100)) {
      const long ar = a * cl.id.mu;
      const auto roots = initial_solutions(ar);
      if (std::find(roots.begin(), roots.end(), sorted(cl.Q.u())) == roots.end()) continue;
      Neighbors nb = adjacency_neighbors(cl.Q);
      if (nb.self_adjacent) c.self_adjacent.push_back(cl.id);
      if (nb.self_adjacent_non_toric) c.non_toric.push_back(cl.id);
    }
  }
  std::sort(c.self_adjacent.begin(), c.self_adjacent.end());
  std::sort(c.non_toric.begin(), c.non_toric.end());
  return c;
}

}  // namespace mkp

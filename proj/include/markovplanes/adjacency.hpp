#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "markovplanes/fwpp.hpp"

namespace mkp {

// Entries of the 3x4 matrix [[-1,-1,l1,0],[-1,-1,0,l2],[0,d0,d1,d2]].
struct KStarData {
  Int l1, l2, d0, d1, d2;
  friend bool operator==(const KStarData&, const KStarData&) = default;
};

// gcd(l_i, d_i) = 1, l_i >= 1 and d0 + d1/l1 + d2/l2 < 0 < d1/l1 + d2/l2.
bool is_valid(const KStarData& k);
// Additionally 1 <= d1 <= l1 <= l2.
bool is_normalized(const KStarData& k);
// Same surface with the two arms ordered and d1 shifted into [1, l1].
KStarData normalized(const KStarData& k);

IntMatrix assemble_3x4(const KStarData& k);
std::array<Int, 4> kstar_weights(const KStarData& k);  // closed form
Rational kstar_degree(const KStarData& k);
// cl(x0), cl(x1), cl(x2)
std::array<Int, 3> kstar_fixed_point_orders(const KStarData& k);

struct Slices {
  IntMatrix P1, P2;
};
Slices slice_matrices(const KStarData& k);

struct AdjacentPair {
  DegreeMatrix Q1, Q2;  // canonical adjusted representatives
  KStarData kstar;      // as produced: 0 <= d1 < l1
  Perm frame;           // Q1 columns reordered so the degenerating point sits at slot 2
  int slot = 2;         // fixed point of the input matrix
  IntMatrix P1, P2;     // slices in the frame
  bool ordered = false;
  bool non_toric = false;
  bool self_adjacent = false;
};

// Throws std::invalid_argument if z(slot) is not T-singular, std::logic_error
// if the partner data is inconsistent.
AdjacentPair adjacent_partner(const DegreeMatrix& Q1, int slot);
bool can_degenerate(const DegreeMatrix& Q, int slot);

struct Neighbors {
  std::vector<AdjacentPair> pairs;        // one per T-singular slot
  std::vector<DegreeMatrix> partners;     // distinct classes other than Q itself
  std::vector<std::size_t> partner_pair;  // index into pairs for each partner
  bool self_adjacent = false;
  bool self_adjacent_non_toric = false;
};
Neighbors adjacency_neighbors(const DegreeMatrix& Q);

enum class GraphScope { AtMostT, AllSeries };

struct GraphNode {
  DegreeMatrix Q;
  SeriesId id;
  std::vector<long> merged_eta;
  bool at_most_t = false;
  bool self_adjacent = false;
  std::string label() const;  // "(u0,u1,u2; eta)"
};
struct GraphEdge {
  std::size_t from, to;  // from < to
  bool jump = false;     // endpoints share no eta
};
struct AdjacencyGraph {
  long a = 0, mu = 1;
  Int norm_bound;
  GraphScope scope = GraphScope::AtMostT;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<std::size_t> self_adjacent;
};

struct GraphOptions {
  GraphScope scope = GraphScope::AtMostT;
  std::size_t max_nodes = 0;
  unsigned jobs = 1;
};
// Throws std::invalid_argument if mu*a is not 5, 6, 8 or 9.
AdjacencyGraph adjacency_graph(long a, long mu, const Int& norm_bound, const GraphOptions& opt = {});

struct Census {
  std::vector<SeriesId> self_adjacent;
  std::vector<SeriesId> non_toric;
};
Census self_adjacency_census();

}  // namespace mkp

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mkp {

using Int = mpz_class;
using Triple = std::array<Int, 3>;
using Perm = std::array<int, 3>;

// Parameters a for which (u0+u1+u2)^2 = a*u0*u1*u2 has positive solutions.
inline constexpr std::array<long, 8> kSolvableA{1, 2, 3, 4, 5, 6, 8, 9};
bool is_solvable_parameter(long a);
// Parameters of the primitive classes (entries pairwise coprime).
bool is_reduced_parameter(long a);

Int norm(const Triple& u);
Triple sorted(Triple u);
Triple permuted(const Triple& u, const Perm& p);  // result[i] = u[p[i]]
// Order by norm, then lexicographically.
bool norm_less(const Triple& x, const Triple& y);
std::string to_string(const Triple& u);

bool is_solution(const Triple& u, long a);

// u2 -> a*u0*u1 - 2u0 - 2u1 - u2.  Throws std::invalid_argument if u is no solution.
Triple mutate(const Triple& u, long a);

// Sorted results of mutating each slot, deduplicated, ordered by norm_less.
std::vector<Triple> one_step_mutations(const Triple& u, long a);

// Throws std::invalid_argument on unsorted input.
bool is_initial(const Triple& u, long a);

std::vector<Triple> initial_solutions(long a);

struct TreeLimits {
  std::size_t max_nodes = 0;  // 0: unlimited
  std::optional<std::size_t> max_depth;
};

struct MutationTree {
  long a = 0;
  Int norm_bound;
  std::vector<Triple> nodes;  // sorted triples, ordered by norm_less
  std::vector<std::size_t> depth;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // first < second
  std::vector<std::size_t> roots;

  std::optional<std::size_t> find(const Triple& u) const;
};

// All sorted solutions with norm <= norm_bound.  Throws std::length_error
// when limits.max_nodes is exceeded.
MutationTree enumerate_tree(long a, const Int& norm_bound, const TreeLimits& limits = {});

// Adjusted slot order for a primitive solution of parameter a in {5,6,8,9}.
bool is_adjusted(const Triple& v, long a);
Perm adjusted_permutation(const Triple& v, long a);

struct ScaledClass {
  Int scale;       // b
  long reduced_a;  // a' = a*b
};
// u = b*v with v in S(a').  Throws std::invalid_argument if u is no solution.
ScaledClass scaled_solution_class(const Triple& u, long a);

struct SquareDecomposition {
  std::array<Int, 3> x;
  std::array<long, 3> xi;
  Perm perm;  // decomposed slot i sits at input slot perm[i]
  Int scale;
  long reduced_a;
  long root;  // sqrt(a' * xi0 * xi1 * xi2)
};
SquareDecomposition decompose(const Triple& u, long a);

}  // namespace mkp

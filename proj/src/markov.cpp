#include "markovplanes/markov.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mkp {

bool is_solvable_parameter(long a) {
  return std::find(kSolvableA.begin(), kSolvableA.end(), a) != kSolvableA.end();
}

bool is_reduced_parameter(long a) { return a == 5 || a == 6 || a == 8 || a == 9; }

Int norm(const Triple& u) { return u[0] + u[1] + u[2]; }

Triple sorted(Triple u) {
  std::sort(u.begin(), u.end());
  return u;
}

Triple permuted(const Triple& u, const Perm& p) { return {u[p[0]], u[p[1]], u[p[2]]}; }

bool norm_less(const Triple& x, const Triple& y) {
  Int nx = norm(x), ny = norm(y);
  if (nx != ny) return nx < ny;
  return x < y;
}

std::string to_string(const Triple& u) {
  std::ostringstream os;
  os << '(' << u[0] << ',' << u[1] << ',' << u[2] << ')';
  return os.str();
}

bool is_solution(const Triple& u, long a) {
  if (a <= 0) return false;
  for (const auto& x : u)
    if (sgn(x) <= 0) return false;
  Int s = norm(u);
  return s * s == a * (u[0] * u[1] * u[2]);
}

Triple mutate(const Triple& u, long a) {
  if (!is_solution(u, a))
    throw std::invalid_argument("mutate: " + to_string(u) + " is not a solution for a=" +
                                std::to_string(a));
  return {u[0], u[1], a * u[0] * u[1] - 2 * u[0] - 2 * u[1] - u[2]};
}

std::vector<Triple> one_step_mutations(const Triple& u, long a) {
  static constexpr Perm plays[3] = {{1, 2, 0}, {0, 2, 1}, {0, 1, 2}};
  std::vector<Triple> out;
  for (const auto& p : plays) out.push_back(sorted(mutate(permuted(u, p), a)));
  std::sort(out.begin(), out.end(), norm_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_initial(const Triple& u, long a) {
  if (!(u[0] <= u[1] && u[1] <= u[2]))
    throw std::invalid_argument("is_initial: triple must be ascending");
  return is_solution(u, a) && u[2] <= u[0] + u[1];
}

std::vector<Triple> initial_solutions(long a) {
  if (a <= 0) throw std::invalid_argument("initial_solutions: a must be positive");
  long lo = 1, hi = 0;
  switch (a) {
    case 1: lo = 5, hi = 60; break;
    case 2: lo = 3, hi = 18; break;
    case 3: lo = 2, hi = 12; break;
    case 4: lo = 2, hi = 6; break;
    default: hi = 12 / (a - 4);
  }
  std::vector<Triple> out;
  for (long u0 = lo; u0 <= hi; ++u0)
    for (long u1 = u0; u1 <= hi; ++u1)
      for (long u2 = u1; u2 <= std::min(hi, u0 + u1); ++u2) {
        Triple t{Int(u0), Int(u1), Int(u2)};
        if (is_solution(t, a)) out.push_back(t);
      }
  std::sort(out.begin(), out.end(), norm_less);
  return out;
}

std::optional<std::size_t> MutationTree::find(const Triple& u) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), u, norm_less);
  if (it == nodes.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

MutationTree enumerate_tree(long a, const Int& norm_bound, const TreeLimits& limits) {
  MutationTree tree;
  tree.a = a;
  tree.norm_bound = norm_bound;
  if (!is_solvable_parameter(a)) return tree;

  std::map<Triple, std::size_t> depth;
  std::set<std::pair<Triple, Triple>> edges;
  std::queue<Triple> todo;
  auto admit = [&](const Triple& t, std::size_t d) {
    if (depth.count(t)) return;
    if (limits.max_nodes && depth.size() >= limits.max_nodes)
      throw std::length_error("enumerate_tree: node limit " + std::to_string(limits.max_nodes) +
                              " exceeded");
    depth.emplace(t, d);
    todo.push(t);
  };
  for (const auto& t : initial_solutions(a))
    if (norm(t) <= norm_bound) admit(t, 0);

  while (!todo.empty()) {
    Triple t = todo.front();
    todo.pop();
    std::size_t d = depth.at(t);
    if (limits.max_depth && d >= *limits.max_depth) continue;
    for (const auto& m : one_step_mutations(t, a)) {
      if (m == t || norm(m) > norm_bound) continue;
      edges.emplace(std::min(t, m), std::max(t, m));
      admit(m, d + 1);
    }
  }

  for (const auto& [t, d] : depth) tree.nodes.push_back(t);
  std::sort(tree.nodes.begin(), tree.nodes.end(), norm_less);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    std::size_t d = depth.at(tree.nodes[i]);
    tree.depth.push_back(d);
    if (d == 0) tree.roots.push_back(i);
  }
  for (const auto& [x, y] : edges) {
    std::size_t i = *tree.find(x), j = *tree.find(y);
    tree.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

namespace {

Int mod_of(const Int& x, long m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

// Index of the unique entry divisible by m, or -1.
int unique_divisible(const Triple& v, long m) {
  int hit = -1;
  for (int i = 0; i < 3; ++i)
    if (mod_of(v[i], m) == 0) {
      if (hit >= 0) return -1;
      hit = i;
    }
  return hit;
}

Perm with_last(const Triple& v, int last) {
  Perm p{};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != last) p[k++] = i;
  if (v[p[1]] < v[p[0]]) std::swap(p[0], p[1]);
  p[2] = last;
  return p;
}

}  // namespace

bool is_adjusted(const Triple& v, long a) {
  switch (a) {
    case 9: return v[0] <= v[1] && v[1] <= v[2];
    case 8: return v[0] <= v[1] && mod_of(v[2], 2) == 0;
    case 6: return mod_of(v[1], 2) == 0 && mod_of(v[2], 3) == 0;
    case 5: return v[0] <= v[1] && mod_of(v[2], 5) == 0;
    default: return false;
  }
}

Perm adjusted_permutation(const Triple& v, long a) {
  auto fail = [&] {
    return std::invalid_argument("adjusted_permutation: " + to_string(v) +
                                 " has no adjusted order for a=" + std::to_string(a));
  };
  Perm p{0, 1, 2};
  switch (a) {
    case 9:
      std::stable_sort(p.begin(), p.end(), [&](int i, int j) { return v[i] < v[j]; });
      return p;
    case 8:
    case 5: {
      int k = unique_divisible(v, a == 8 ? 2 : 5);
      if (k < 0) throw fail();
      return with_last(v, k);
    }
    case 6: {
      int two = unique_divisible(v, 2), three = unique_divisible(v, 3);
      if (two < 0 || three < 0 || two == three) throw fail();
      return {3 - two - three, two, three};
    }
    default: throw fail();
  }
}

ScaledClass scaled_solution_class(const Triple& u, long a) {
  if (!is_solution(u, a))
    throw std::invalid_argument("scaled_solution_class: " + to_string(u) +
                                " is not a solution for a=" + std::to_string(a));
  Int g = gcd(gcd(u[0], u[1]), u[2]);
  Int ab = a * g;
  if (!ab.fits_slong_p() || !is_reduced_parameter(ab.get_si()))
    throw std::logic_error("scaled_solution_class: unexpected scaling for " + to_string(u));
  return {g, ab.get_si()};
}

SquareDecomposition decompose(const Triple& u, long a) {
  auto [b, ar] = scaled_solution_class(u, a);
  Triple v{u[0] / b, u[1] / b, u[2] / b};
  SquareDecomposition dec;
  dec.scale = b;
  dec.reduced_a = ar;
  dec.perm = adjusted_permutation(v, ar);
  switch (ar) {
    case 9: dec.xi = {1, 1, 1}, dec.root = 3; break;
    case 8: dec.xi = {1, 1, 2}, dec.root = 4; break;
    case 6: dec.xi = {1, 2, 3}, dec.root = 6; break;
    default: dec.xi = {1, 1, 5}, dec.root = 5; break;
  }
  for (int i = 0; i < 3; ++i) {
    const Int& e = v[dec.perm[i]];
    if (e % dec.xi[i] != 0) throw std::logic_error("decompose: no square shape for " + to_string(u));
    Int q = e / dec.xi[i];
    if (!mpz_perfect_square_p(q.get_mpz_t()))
      throw std::logic_error("decompose: no square shape for " + to_string(u));
    dec.x[i] = sqrt(q);
  }
  Int lhs = dec.xi[0] * dec.x[0] * dec.x[0] + dec.xi[1] * dec.x[1] * dec.x[1] +
            dec.xi[2] * dec.x[2] * dec.x[2];
  if (lhs != dec.root * dec.x[0] * dec.x[1] * dec.x[2])
    throw std::logic_error("decompose: reduced equation fails for " + to_string(u));
  return dec;
}

}  // namespace mkp

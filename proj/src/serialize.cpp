#include "markovplanes/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace mkp {

Json to_json(const Int& x) { return x.get_str(); }

Json to_json(const Triple& u) { return Json::array({u[0].get_str(), u[1].get_str(), u[2].get_str()}); }

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw std::invalid_argument("not a decimal integer: " + j.get<std::string>());
    return x;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Triple triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected three integers, got " + j.dump());
  return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2])};
}

Json to_json(const IntMatrix& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(M(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("expected a matrix, got " + j.dump());
  IntMatrix M(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != M.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < M.cols(); ++k) M(i, k) = int_from_json(j[i][k]);
  }
  return M;
}

DegreeMatrix degree_matrix_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  DegreeMatrix Q;
  if (!j.contains("u")) {
    if (!j.contains("generator")) throw std::invalid_argument("missing field \"u\" or \"generator\"");
    IntMatrix P = int_matrix_from_json(j.at("generator"));
    if (!is_generator_matrix(P)) throw std::invalid_argument(P.str() + " is not a generator matrix");
    Q = degree_matrix_of(P);
  } else {
    long mu = 1;
    if (j.contains("mu")) {
      Int m = int_from_json(j.at("mu"));
      if (m < 1 || !m.fits_slong_p()) throw std::invalid_argument("mu must be a positive integer");
      mu = m.get_si();
    }
    Triple u = triple_from_json(j.at("u"));
    Triple e = j.contains("eta") ? triple_from_json(j.at("eta")) : Triple{0, 0, 0};
    DegreeMatrix R;
    R.ctx.mu = mu;
    for (int i = 0; i < 3; ++i) R.q[i] = k_element(R.ctx, u[i], e[i]);
    Q = R;
  }
  if (!is_degree_matrix(Q))
    throw std::invalid_argument(to_string(Q) + " is not a degree matrix (columns must pairwise generate K)");
  return Q;
}

std::string t_flags(const SingularityReport& rep) {
  std::string s = "(";
  for (int k = 0; k < 3; ++k) s += std::string(k ? "," : "") + (rep.points[k].is_t ? "+" : "-");
  return s + ")";
}

std::string constellation(const DegreeMatrix& Q, const SingularityReport& rep) {
  if (!is_adjusted(Q)) return "";
  const long ar = *integral_degree(fake_weights(Q)) * Q.mu();
  SquareDecomposition dec = decompose(Q.u(), ar);
  std::array<Int, 3> x;
  for (int i = 0; i < 3; ++i) x[dec.perm[i]] = dec.x[i];
  std::string s = "(";
  for (int k = 0; k < 3; ++k) {
    Int c = rep.points[k].iota / x[k];
    s += (k ? "," : "");
    if (c * x[k] != rep.points[k].iota) {
      s += rep.points[k].iota.get_str();
      continue;
    }
    if (c != 1) s += c.get_str();
    s += "x" + std::to_string(k);
  }
  return s + ")";
}

Json to_json(const SingularityReport& rep) {
  Json out = Json::object();
  for (int k = 0; k < 3; ++k) {
    const PointReport& p = rep.points[k];
    Json j = {{"cl", to_json(p.cl)}, {"iota", to_json(p.iota)}, {"isT", p.is_t}};
    j["d"] = p.is_t ? to_json(p.d) : Json(nullptr);
    j["resCurves"] = p.res_curves;
    out["z" + std::to_string(k)] = j;
  }
  return out;
}

Json to_json(const DegreeMatrix& Q, bool with_report) {
  Json j;
  j["mu"] = Q.mu();
  j["u"] = to_json(Q.u());
  auto e = Q.eta();
  j["eta"] = Json::array({e[0], e[1], e[2]});
  if (is_adjusted(Q)) j["series"] = series_id(Q).str();
  Triple w = fake_weights(Q);
  j["weights"] = to_json(w);
  j["degree"] = degree(w).get_str();
  if (with_report) {
    SingularityReport rep = singularity_report(Q);
    j["report"] = to_json(rep);
    j["generator"] = to_json(generator_matrix_of(Q));
    j["anticanonical"] = {{"free", to_json(anticanonical_class(Q).free)},
                          {"tors", anticanonical_class(Q).tors}};
    std::string c = constellation(Q, rep);
    if (!c.empty()) j["constellation"] = c;
    j["tFlags"] = t_flags(rep);
  }
  return j;
}

Json to_json(const Classified& c) {
  Json j = to_json(c.Q, true);
  j["series"] = c.id.str();
  j["mergedEta"] = c.merged_eta;
  return j;
}

Json to_json(const MutationTree& t) {
  Json j;
  j["a"] = t.a;
  j["bound"] = to_json(t.norm_bound);
  Json nodes = Json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    nodes.push_back({{"u", to_json(t.nodes[i])}, {"norm", to_json(norm(t.nodes[i]))}, {"depth", t.depth[i]}});
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [x, y] : t.edges) edges.push_back({x, y});
  j["edges"] = edges;
  j["roots"] = t.roots;
  return j;
}

Json to_json(const AdjacencyGraph& g) {
  Json j;
  j["a"] = g.a;
  j["mu"] = g.mu;
  j["bound"] = to_json(g.norm_bound);
  j["scope"] = g.scope == GraphScope::AtMostT ? "at-most-T" : "all";
  Json nodes = Json::array();
  for (const auto& n : g.nodes) {
    Json x = to_json(n.Q, false);
    x["series"] = n.id.str();
    x["label"] = n.label();
    x["mergedEta"] = n.merged_eta;
    x["atMostT"] = n.at_most_t;
    nodes.push_back(x);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"jump", e.jump}});
  j["edges"] = edges;
  j["selfAdjacent"] = g.self_adjacent;
  return j;
}

Json to_json(const IsoWitness& w) {
  return {{"automorphism", {{"eps", w.phi.eps}, {"a", w.phi.a}, {"c", w.phi.c}}},
          {"permutation", Json::array({w.perm[0], w.perm[1], w.perm[2]})}};
}

std::string to_dot(const MutationTree& t) {
  std::ostringstream os;
  os << "graph T" << t.a << " {\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << to_string(t.nodes[i]) << "\"];\n";
  for (const auto& [x, y] : t.edges) os << "  n" << x << " -- n" << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const AdjacencyGraph& g) {
  std::ostringstream os;
  os << "graph T_" << g.a << "_" << g.mu << " {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << g.nodes[i].label() << "\"";
    if (g.nodes[i].self_adjacent) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -- n" << e.to;
    if (e.jump) os << " [color=red]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_tsv(const MutationTree& t) {
  std::ostringstream os;
  os << "norm\tu0\tu1\tu2\tdepth\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& u = t.nodes[i];
    os << norm(u) << '\t' << u[0] << '\t' << u[1] << '\t' << u[2] << '\t' << t.depth[i] << '\n';
  }
  return os.str();
}

std::string to_tsv(const std::vector<Classified>& rows) {
  std::ostringstream os;
  os << "series\tmu\tu0\tu1\tu2\teta\tw0\tw1\tw2\tdegree\tmerged_eta\n";
  for (const auto& c : rows) {
    Triple u = c.Q.u(), w = fake_weights(c.Q);
    os << c.id.str() << '\t' << c.Q.mu() << '\t' << u[0] << '\t' << u[1] << '\t' << u[2] << '\t'
       << c.Q.q[2].tors << '\t' << w[0] << '\t' << w[1] << '\t' << w[2] << '\t' << degree(w).get_str()
       << '\t';
    for (std::size_t i = 0; i < c.merged_eta.size(); ++i) os << (i ? "," : "") << c.merged_eta[i];
    os << '\n';
  }
  return os.str();
}

std::string to_tsv(const DegreeMatrix& Q, const SingularityReport& rep) {
  std::ostringstream os;
  os << "point\tcl\tiota\tT\td\tres_curves\n";
  (void)Q;
  for (int k = 0; k < 3; ++k) {
    const auto& p = rep.points[k];
    os << 'z' << k << '\t' << p.cl << '\t' << p.iota << '\t' << (p.is_t ? '+' : '-') << '\t'
       << (p.is_t ? p.d.get_str() : "-") << '\t' << p.res_curves << '\n';
  }
  return os.str();
}

std::string to_tsv(const AdjacencyGraph& g) {
  std::ostringstream os;
  os << "from\tto\tjump\n";
  for (const auto& e : g.edges)
    os << g.nodes[e.from].label() << '\t' << g.nodes[e.to].label() << '\t' << (e.jump ? "red" : "-") << '\n';
  return os.str();
}

std::string to_markdown(const MutationTree& t) {
  std::ostringstream os;
  os << "| norm | u | depth |\n|---:|---|---:|\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    os << "| " << norm(t.nodes[i]) << " | " << to_string(t.nodes[i]) << " | " << t.depth[i] << " |\n";
  return os.str();
}

std::string to_markdown(const std::vector<Classified>& rows) {
  std::ostringstream os;
  long mu = -1;
  for (const auto& c : rows) {
    if (c.Q.mu() != mu) {
      mu = c.Q.mu();
      os << (os.tellp() > 0 ? "\n" : "") << "### a = " << c.id.a << ", K = Z" << (mu > 1 ? " + Z/" + std::to_string(mu) : "")
         << "\n\n| ID | u | eta | w | iota | T | w_Z |\n|---|---|---:|---|---|---|---|\n";
    }
    SingularityReport rep = singularity_report(c.Q);
    KElement wz = anticanonical_class(c.Q);
    os << "| (" << c.id.str() << ") | " << to_string(c.Q.u()) << " | ";
    for (std::size_t i = 0; i < c.merged_eta.size(); ++i) os << (i ? "," : "") << c.merged_eta[i];
    os << " | " << to_string(fake_weights(c.Q)) << " | " << constellation(c.Q, rep) << " | " << t_flags(rep)
       << " | (" << wz.free << ", " << wz.tors << ") |\n";
  }
  return os.str();
}

std::string to_markdown(const DegreeMatrix& Q, const SingularityReport& rep) {
  std::ostringstream os;
  os << "Q = " << to_string(Q) << "\n\n| point | cl | iota | T | d | curves |\n|---|---:|---:|---|---:|---:|\n";
  for (int k = 0; k < 3; ++k) {
    const auto& p = rep.points[k];
    os << "| z(" << k << ") | " << p.cl << " | " << p.iota << " | " << (p.is_t ? '+' : '-') << " | "
       << (p.is_t ? p.d.get_str() : "-") << " | " << p.res_curves << " |\n";
  }
  return os.str();
}

}  // namespace mkp

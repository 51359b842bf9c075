#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "markovplanes/adjacency.hpp"
#include "markovplanes/serialize.hpp"

using namespace mkp;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_bound(const std::string& s) {
  Int b;
  if (s.empty() || b.set_str(s, 10) != 0 || b < 0) throw UsageError("--bound must be a non-negative integer");
  return b;
}

std::string read_input(const std::vector<std::string>& files, std::size_t i) {
  std::ostringstream os;
  if (files.size() <= i || files[i] == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(files[i]);
    if (!in) throw UsageError("cannot open " + files[i]);
    os << in.rdbuf();
  }
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

DegreeMatrix matrix_from(const Json& j) {
  try {
    return degree_matrix_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const Json::exception& e) {
    throw UsageError(e.what());
  }
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed, const char* cmd) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw UsageError(std::string("format ") + fmt + " is not available for " + cmd);
}

unsigned job_count(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squared Markov equations and fake weighted projective planes"};
  app.require_subcommand(1);

  long a = 0, mu = 1;
  std::string bound = "1000000", format, scope = "t";
  std::size_t max_nodes = 200000;
  unsigned jobs = 1;
  std::size_t depth = 0;
  bool json = false;
  std::vector<std::string> files;

  auto common = [&](CLI::App* c, bool need_a) {
    auto* opt = c->add_option("--a", a, "degree parameter");
    if (need_a) opt->required();
    c->add_option("--bound", bound, "norm bound on the weight vector")->capture_default_str();
    c->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot", "md", "tsv"}));
    c->add_flag("--json", json, "same as --format json");
    c->add_option("--max-nodes", max_nodes, "cap on enumerated tree nodes, 0 for none")->capture_default_str();
    c->add_option("--jobs", jobs, "worker threads, 0 for all cores")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "list solutions of (u0+u1+u2)^2 = a*u0*u1*u2");
  common(solve, true);
  solve->add_option("--depth", depth, "maximal distance from an initial triple");

  auto* cls = app.add_subcommand("classify", "adjusted degree matrices of integral degree a");
  common(cls, true);

  auto* sing = app.add_subcommand("sing", "singularities of a fake weighted projective plane");
  sing->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "md", "tsv"}));
  sing->add_flag("--json", json, "same as --format json");
  sing->add_option("file", files, "degree matrix JSON, '-' or none for stdin");

  auto* graph = app.add_subcommand("graph", "adjacency graph T(a, mu)");
  common(graph, true);
  graph->add_option("--mu", mu, "torsion order")->required();
  graph->add_option("--scope", scope, "t: at most T-singular nodes, all: every series")
      ->check(CLI::IsMember({"t", "all"}))
      ->capture_default_str();

  auto* iso = app.add_subcommand("iso", "decide isomorphy of two degree matrices");
  iso->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  iso->add_flag("--json", json, "same as --format json");
  iso->add_option("files", files, "{\"left\",\"right\"} or [Q, Q'] document, or two files")->expected(0, 2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (json) format = "json";

  try {
    const Int nb = parse_bound(bound);
    if (*solve) {
      if (a <= 0) throw UsageError("--a must be positive");
      if (format.empty()) format = "tsv";
      TreeLimits lim{max_nodes, std::nullopt};
      if (depth) lim.max_depth = depth;
      MutationTree t = enumerate_tree(a, nb, lim);
      if (format == "json") std::cout << to_json(t).dump(2) << '\n';
      else if (format == "dot") std::cout << to_dot(t);
      else if (format == "md") std::cout << to_markdown(t);
      else std::cout << to_tsv(t);
    } else if (*cls) {
      if (a <= 0) throw UsageError("--a must be positive");
      if (format.empty()) format = "tsv";
      require_format(format, {"json", "md", "tsv"}, "classify");
      auto rows = classify(a, nb, {max_nodes, job_count(jobs)});
      if (format == "json") {
        Json out = Json::array();
        for (const auto& c : rows) out.push_back(to_json(c));
        std::cout << out.dump(2) << '\n';
      } else if (format == "md") {
        std::cout << to_markdown(rows);
      } else {
        std::cout << to_tsv(rows);
      }
    } else if (*sing) {
      if (format.empty()) format = "tsv";
      DegreeMatrix Q = matrix_from(parse_json(read_input(files, 0)));
      SingularityReport rep = singularity_report(Q);
      if (format == "json") std::cout << to_json(Q, true).dump(2) << '\n';
      else if (format == "md") std::cout << to_markdown(Q, rep);
      else std::cout << to_tsv(Q, rep);
    } else if (*graph) {
      if (format.empty()) format = "dot";
      require_format(format, {"json", "dot", "tsv"}, "graph");
      GraphOptions opt{scope == "all" ? GraphScope::AllSeries : GraphScope::AtMostT, max_nodes, job_count(jobs)};
      AdjacencyGraph g;
      try {
        g = adjacency_graph(a, mu, nb, opt);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (format == "json") std::cout << to_json(g).dump(2) << '\n';
      else if (format == "tsv") std::cout << to_tsv(g);
      else std::cout << to_dot(g);
    } else if (*iso) {
      if (format.empty()) format = "json";
      DegreeMatrix L, R;
      if (files.size() == 2) {
        L = matrix_from(parse_json(read_input(files, 0)));
        R = matrix_from(parse_json(read_input(files, 1)));
      } else {
        Json doc = parse_json(read_input(files, 0));
        if (doc.is_object() && doc.contains("left") && doc.contains("right")) {
          L = matrix_from(doc["left"]), R = matrix_from(doc["right"]);
        } else if (doc.is_array() && doc.size() == 2) {
          L = matrix_from(doc[0]), R = matrix_from(doc[1]);
        } else {
          throw UsageError("expected {\"left\": Q, \"right\": Q'} or [Q, Q']");
        }
      }
      auto w = find_isomorphism(L, R);
      if (format == "json") {
        Json out = {{"isomorphic", w.has_value()}};
        if (w) out["witness"] = to_json(*w);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << (w ? "isomorphic" : "not isomorphic");
        if (w)
          std::cout << "\teps=" << w->phi.eps << "\ta=" << w->phi.a << "\tc=" << w->phi.c << "\tperm="
                    << w->perm[0] << ',' << w->perm[1] << ',' << w->perm[2];
        std::cout << '\n';
      }
      return w ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << " (raise --max-nodes or lower --bound)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

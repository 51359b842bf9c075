#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "markovplanes/adjacency.hpp"
#include "markovplanes/fwpp.hpp"
#include "markovplanes/markov.hpp"

namespace mkp {

using Json = nlohmann::ordered_json;

// Integers travel as decimal strings; readers also accept JSON numbers.
Json to_json(const Int& x);
Json to_json(const Triple& u);
Int int_from_json(const Json& j);
Triple triple_from_json(const Json& j);

Json to_json(const IntMatrix& M);
IntMatrix int_matrix_from_json(const Json& j);

// {"mu", "u", "eta"} or {"generator": [[..],[..]]}.  Throws std::invalid_argument.
DegreeMatrix degree_matrix_from_json(const Json& j);

Json to_json(const SingularityReport& rep);
// mu, u, eta, series (when adjusted), weights, degree, report.
Json to_json(const DegreeMatrix& Q, bool with_report = true);
Json to_json(const Classified& c);
Json to_json(const MutationTree& t);
Json to_json(const AdjacencyGraph& g);
Json to_json(const IsoWitness& w);

std::string to_dot(const MutationTree& t);
std::string to_dot(const AdjacencyGraph& g);

std::string to_tsv(const MutationTree& t);
std::string to_tsv(const std::vector<Classified>& rows);
std::string to_tsv(const DegreeMatrix& Q, const SingularityReport& rep);
std::string to_tsv(const AdjacencyGraph& g);

std::string to_markdown(const MutationTree& t);
std::string to_markdown(const std::vector<Classified>& rows);
std::string to_markdown(const DegreeMatrix& Q, const SingularityReport& rep);

// "(3x0,6x1,x2)": local Gorenstein indices as multiples of the square roots
// x_k of the adjusted u.  Empty if Q is not adjusted.
std::string constellation(const DegreeMatrix& Q, const SingularityReport& rep);
std::string t_flags(const SingularityReport& rep);  // "(+,-,+)"

}  // namespace mkp

#pragma once
// JSON and text forms for graphs, colorings, monomials and polynomials, plus
// order-file parsing. All emission is deterministic.

#include <string>
#include <vector>

#include <json.hpp>

#include "kempe/graph.hpp"
#include "kempe/polynomial.hpp"

namespace kempe {

using Json = nlohmann::ordered_json;

// {"vertices": d, "edges": [[u,v], ...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph load_graph(const std::string& path);

// {"classes": [[...], ...]}; the class count is k, empty arrays allowed.
Coloring coloring_from_json(const Json& j);
Json coloring_to_json(const Coloring& f);
Coloring load_coloring(const std::string& path);

std::vector<Coloring> sequence_from_json(const Json& j);  // array of coloring objects
Json sequence_to_json(const std::vector<Coloring>& sequence);

// "x{1,5}*x{3,4} - x{1,3,5}*x{4}", "x{}^2", "1", "0".
std::string monomial_text(const Monomial& m, const VariableTable& table);
std::string polynomial_text(const Polynomial& p, const MonomialOrder& order,
                            const VariableTable& table);

// [{"coeff": c, "exponents": [[var,exp], ...]}, ...], larger term first.
Json polynomial_to_json(const Polynomial& p, const MonomialOrder& order);

Json parse_json_file(const std::string& path);  // DomainError with location on bad input

// An order file holds the full variable list as stable sets, smallest first.
MonomialOrder order_from_spec(const std::string& spec, const VariableTable& table);

}  // namespace kempe

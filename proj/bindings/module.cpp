// Python bindings. Colorings cross the boundary as lists of vertex lists;
// the Session class owns the table and basis so repeated queries on one
// graph reuse them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "kempe/equivalence.hpp"
#include "kempe/ideals.hpp"
#include "kempe/io.hpp"
#include "kempe/oracle.hpp"

namespace py = pybind11;
using namespace kempe;

namespace {

using PyColoring = std::vector<std::vector<int>>;

Coloring to_coloring(const PyColoring& classes) {
  std::vector<VertexSet> out;
  for (const auto& cls : classes) out.emplace_back(cls.begin(), cls.end());
  return Coloring(std::move(out));
}

PyColoring from_coloring(const Coloring& f) {
  PyColoring out;
  for (const auto& cls : f.classes()) out.push_back(cls);
  return out;
}

std::vector<PyColoring> from_colorings(const std::vector<Coloring>& colorings) {
  std::vector<PyColoring> out;
  out.reserve(colorings.size());
  for (const auto& f : colorings) out.push_back(from_coloring(f));
  return out;
}

// One graph, its variable table, the Kempe ideal basis and (lazily) the
// switching sequences attached to its binomials.
class Session {
 public:
  explicit Session(const Graph& graph)
      : graph_(graph),
        table_(graph_),
        basis_(kempe_groebner_basis(graph_, table_, MonomialOrder::grevlex_default(table_.size()))) {}

  std::vector<std::vector<int>> stable_sets() const {
    std::vector<std::vector<int>> out;
    for (const auto& s : table_.stable_sets()) out.push_back(s);
    return out;
  }

  bool are_equivalent(const PyColoring& f, const PyColoring& g) const {
    return kempe::are_equivalent(graph_, to_coloring(f), to_coloring(g), basis_, table_);
  }

  long long hilbert(int k) const { return kempe::hilbert(basis_, k); }

  std::vector<long long> hilbert_series(int max_k) const {
    return kempe::hilbert_series(basis_, max_k);
  }

  long long class_count(int k, const std::string& method) const {
    if (method != "a" && method != "b") throw DomainError("method must be 'a' or 'b'");
    return kempe::class_count(graph_, k, basis_, table_,
                              method == "a" ? CountMethod::Representatives
                                            : CountMethod::InclusionExclusion);
  }

  std::pair<std::vector<PyColoring>, std::vector<PyColoring>> representatives(int k) const {
    auto system = representative_system(graph_, k, basis_, table_);
    return {from_colorings(system.all), from_colorings(system.full)};
  }

  std::vector<PyColoring> kempe_class(const PyColoring& f) const {
    return from_colorings(enumerate_class(graph_, to_coloring(f), basis_, table_));
  }

  std::optional<std::vector<PyColoring>> switching_sequence(const PyColoring& f,
                                                            const PyColoring& g) {
    ensure_kempe_basis();
    auto result = kempe::switching_sequence(graph_, to_coloring(f), to_coloring(g), basis_,
                                            kempe_basis_, table_);
    if (!result.equivalent) return std::nullopt;
    return from_colorings(result.sequence);
  }

  std::vector<std::string> groebner_basis_text() const {
    std::vector<std::string> out;
    for (const auto& p : basis_.elements) out.push_back(polynomial_text(p, basis_.order, table_));
    return out;
  }

 private:
  void ensure_kempe_basis() {
    if (!kempe_basis_ready_) {
      kempe_basis_ = kempe::kempe_basis(graph_, basis_, table_);
      kempe_basis_ready_ = true;
    }
  }

  Graph graph_;
  VariableTable table_;
  GroebnerBasis basis_;
  std::vector<KempeBasisEntry> kempe_basis_;
  bool kempe_basis_ready_ = false;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kempe equivalence of graph colorings via binomial ideals and Groebner bases";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("vertices"),
           py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("complement", &Graph::complement)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(vertices=" + std::to_string(g.vertex_count()) + ", edges=" +
               std::to_string(g.edges().size()) + ")";
      });

  py::class_<Session>(m, "Session")
      .def(py::init<const Graph&>(), py::arg("graph"))
      .def("stable_sets", &Session::stable_sets)
      .def("are_equivalent", &Session::are_equivalent, py::arg("f"), py::arg("g"))
      .def("hilbert", &Session::hilbert, py::arg("k"))
      .def("hilbert_series", &Session::hilbert_series, py::arg("max_k"))
      .def("class_count", &Session::class_count, py::arg("k"), py::arg("method") = "a")
      .def("representatives", &Session::representatives, py::arg("k"))
      .def("kempe_class", &Session::kempe_class, py::arg("f"))
      .def("switching_sequence", &Session::switching_sequence, py::arg("f"), py::arg("g"))
      .def("groebner_basis_text", &Session::groebner_basis_text);

  m.def("stable_sets", [](const Graph& g) { return Session(g).stable_sets(); }, py::arg("graph"));
  m.def("max_degree", &max_degree, py::arg("graph"));
  m.def("chromatic_number", &chromatic_number, py::arg("graph"));
  m.def(
      "classify_chain", [](const Graph& g) { return chain_case_name(classify_chain(g)); },
      py::arg("graph"));
  m.def(
      "oracle_equivalent",
      [](const Graph& g, const PyColoring& f, const PyColoring& h) {
        return oracle::are_equivalent_bruteforce(g, to_coloring(f), to_coloring(h));
      },
      py::arg("graph"), py::arg("f"), py::arg("g"));
  m.def(
      "oracle_class_count",
      [](const Graph& g, int k) {
        return oracle::classes_bruteforce(g, k, g.vertices()).component_count;
      },
      py::arg("graph"), py::arg("k"));
  m.def(
      "verify_sequence",
      [](const Graph& g, const std::vector<PyColoring>& sequence) {
        std::vector<Coloring> seq;
        for (const auto& f : sequence) seq.push_back(to_coloring(f));
        auto result = oracle::verify_sequence(g, seq);
        return std::make_pair(result.ok, result.first_failure);
      },
      py::arg("graph"), py::arg("sequence"));
}

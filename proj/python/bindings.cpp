#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "dar/certify.hpp"
#include "dar/colouring.hpp"
#include "dar/constructions.hpp"
#include "dar/error.hpp"
#include "dar/families.hpp"
#include "dar/io.hpp"
#include "dar/matching.hpp"
#include "dar/rainbow.hpp"
#include "dar/random.hpp"

namespace py = pybind11;
using namespace dar;

namespace {

using Colours = std::vector<std::optional<Colour>>;

std::string rational_text(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

EdgeColouring to_colouring(const Graph& g, const Colours& colours) {
  require(static_cast<int>(colours.size()) == g.edge_count(), "one colour per edge expected");
  return EdgeColouring(colours);
}

py::dict embedding_dict(const Embedding& e) {
  py::dict d;
  d["vertex_map"] = e.vertex_map;
  d["image_edges"] = e.image_edges;
  d["colours"] = e.colours;
  return d;
}

SetFamily family_from(const std::string& json_text) { return family_from_json(Json::parse(json_text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Degree anti-Ramsey toolkit";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &Graph::degree)
      .def("edge_id", &Graph::edge_id)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("named_graph", &named_graph, py::arg("name"));
  m.def("gadget", &gadget, py::arg("cycle_length"), py::arg("multiplicity"));
  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("petersen", &petersen);
  m.def("class2_regular", &class2_regular, py::arg("k"));
  m.def("forest_host", &forest_host, py::arg("forest"));
  m.def("random_bridgeless_cubic", [](int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_bridgeless_cubic(n, rng);
  }, py::arg("n"), py::arg("seed") = default_seed);
  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("girth", &girth);
  m.def("chromatic_index", &chromatic_index);
  m.def("is_proper", [](const Graph& g, const Colours& c) { return is_proper(g, to_colouring(g, c)); });

  m.def(
      "forces",
      [](const Graph& host, const Graph& pattern, const std::string& mode, std::optional<std::int64_t> budget_nodes,
         int workers) {
        ForcesOptions o;
        o.budget_nodes = budget_nodes;
        o.workers = workers;
        ForcesCertificate cert = [&] {
          py::gil_scoped_release release;
          return forces(host, Pattern(pattern), parse_mode(mode), o);
        }();
        py::dict d;
        d["verdict"] = to_string(cert.verdict());
        d["mode"] = to_string(cert.mode());
        d["nodes"] = cert.stats().nodes;
        d["max_depth"] = cert.stats().max_depth;
        d["witness"] = cert.witness() ? py::cast(cert.witness()->values()) : py::none();
        return d;
      },
      py::arg("host"), py::arg("pattern"), py::arg("mode") = "proper", py::arg("budget_nodes") = py::none(),
      py::arg("workers") = 1);

  m.def(
      "smallest_forcing_multiplicity",
      [](int k, int d_max, std::optional<std::int64_t> budget_nodes) -> py::object {
        ForcesOptions o;
        o.budget_nodes = budget_nodes;
        const auto r = smallest_forcing_multiplicity(k, d_max, o);
        if (r.inconclusive) return py::str("inconclusive");
        return r.d ? py::object(py::int_(*r.d)) : py::object(py::none());
      },
      py::arg("k"), py::arg("d_max"), py::arg("budget_nodes") = py::none());

  m.def(
      "find_rainbow_copy",
      [](const Graph& g, const Colours& c, const Graph& pattern) -> py::object {
        const auto e = find_rainbow_copy(g, to_colouring(g, c), Pattern(pattern));
        return e ? py::object(embedding_dict(*e)) : py::object(py::none());
      },
      py::arg("host"), py::arg("colouring"), py::arg("pattern"));
  m.def(
      "greedy_rainbow_embed",
      [](int n, const Colours& c, const Graph& pattern) {
        return embedding_dict(greedy_rainbow_embed(n, to_colouring(complete_graph(n), c), Pattern(pattern)));
      },
      py::arg("n"), py::arg("colouring"), py::arg("pattern"));
  m.def(
      "rainbow_tree_embed",
      [](const Graph& g, const Colours& c, const Graph& tree) {
        return embedding_dict(rainbow_tree_embed(g, to_colouring(g, c), Pattern(tree)));
      },
      py::arg("host"), py::arg("colouring"), py::arg("tree"));

  m.def(
      "avoid_rainbow_c4",
      [](const Graph& g) { return avoid_rainbow_c4_cubic(g).values(); }, py::arg("host"));
  m.def(
      "free_of_rainbow_c4", [](const Graph& g, const Colours& c) { return free_of_rainbow_c4(g, to_colouring(g, c)); },
      py::arg("host"), py::arg("colouring"));

  m.def(
      "_fractional_width",
      [](const std::string& family_json) {
        const auto sol = fractional_width_solution(family_from(family_json));
        std::vector<std::string> weights;
        for (const auto& x : sol.primal) weights.push_back(rational_text(x));
        return std::make_pair(rational_text(sol.value), weights);
      },
      py::arg("family_json"));
  m.def(
      "_disjoint_representatives",
      [](const std::string& family_json) { return disjoint_representatives(family_from(family_json)); },
      py::arg("family_json"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}

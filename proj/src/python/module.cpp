#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nlgraph/error.hpp"
#include "nlgraph/graph_core.hpp"
#include "nlgraph/io.hpp"
#include "nlgraph/modifications.hpp"
#include "nlgraph/resolution.hpp"
#include "nlgraph/topo.hpp"
#include "nlgraph/valuations.hpp"

namespace py = pybind11;
using namespace nlgraph;

namespace {

std::string str(const Integer& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

std::vector<Polynomial> polynomials(const std::vector<std::string>& xs, std::size_t arity) {
  std::vector<Polynomial> out;
  for (const auto& x : xs) out.push_back(parse_polynomial(x, arity));
  return out;
}

std::optional<std::string> value_string(const ExtendedRational& v) {
  if (v.is_infinite()) return std::nullopt;
  return to_string(v.value());
}

py::dict iso_dict(const GraphIsomorphism& m) {
  py::dict vertices, darts;
  for (const auto& [a, b] : m.vertices) vertices[py::str(a.value)] = b.value;
  for (const auto& [a, b] : m.darts) darts[py::str(a.value)] = b.value;
  py::dict out;
  out["vertices"] = vertices;
  out["darts"] = darts;
  return out;
}

struct Config {
  DivisorConfig cfg;
};

std::map<std::string, std::string> multiplicities(const Config& c) {
  std::map<std::string, std::string> out;
  for (const auto& [v, b] : c.cfg.multiplicity) out[v.value] = str(b);
  return out;
}

}  // namespace

PYBIND11_MODULE(_nlgraph, m) {
  m.doc() = "Graph equivalence, blow-up configurations and monomial valuations.";

  auto base = py::register_exception<Error>(m, "NlgraphError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<GraphError>(m, "GraphError", base.ptr());
  py::register_exception<ModificationError>(m, "ModificationError", base.ptr());
  py::register_exception<CertificateError>(m, "CertificateError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ValuationError>(m, "ValuationError", base.ptr());

  py::class_<SerreGraph>(m, "Graph")
      .def_static("parse", [](const std::string& text) { return parse_graph(text).graph; })
      .def_static("load", [](const std::string& path) { return load_graph(path).graph; })
      .def_static("from_edges",
                  [](const std::vector<std::string>& vertices,
                     const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
                    return make_graph(vertices, edges);
                  },
                  py::arg("vertices"), py::arg("edges"))
      .def("to_text", [](const SerreGraph& g) { return format_graph(g); })
      .def("to_json", [](const SerreGraph& g) { return format_graph_json(g); })
      .def("vertices", [](const SerreGraph& g) {
        std::vector<std::string> out;
        for (const auto& [v, l] : g.vertices()) out.push_back(v.value);
        return out;
      })
      .def("edges", [](const SerreGraph& g) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const DartId& d : g.edge_representatives()) {
          out.emplace_back(d.value, g.endpoint(d).value, g.endpoint(g.reverse(d)).value);
        }
        return out;
      })
      .def_property_readonly("vertex_count", &SerreGraph::vertex_count)
      .def_property_readonly("edge_count", &SerreGraph::edge_count)
      .def("__eq__", [](const SerreGraph& a, const SerreGraph& b) { return a == b; })
      .def("__repr__", [](const SerreGraph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
               " edges>";
      });

  m.def("validate", &validate);
  m.def("is_connected", &is_connected);
  m.def("betti", &betti);
  m.def("is_tree", &is_tree);
  m.def("core", &core);
  m.def("reduce", [](const SerreGraph& g) { return reduce(g).graph; });
  m.def("isomorphism", [](const SerreGraph& a, const SerreGraph& b) -> std::optional<py::dict> {
    const auto iso = isomorphism(a, b);
    if (!iso) return std::nullopt;
    return iso_dict(*iso);
  });
  m.def("homeomorphic", &homeomorphic);
  m.def("equivalent", &equivalent);

  m.def("certify", [](const SerreGraph& a, const SerreGraph& b, bool json) -> std::optional<std::string> {
    const auto cert = certify(a, b);
    if (!cert) return std::nullopt;
    return json ? format_certificate_json(*cert) : format_certificate(*cert);
  }, py::arg("a"), py::arg("b"), py::arg("json") = false);
  m.def("verify", [](const SerreGraph& a, const SerreGraph& b, const std::string& cert) {
    return verify(a, b, parse_certificate(cert));
  });
  m.def("apply_script", [](const SerreGraph& g, const std::string& script) {
    const auto steps = parse_script(script);
    return apply_all(g, steps);
  });
  m.def("random_modifications", [](const SerreGraph& g, std::size_t n, std::uint64_t seed) {
    ModifiedGraph r = random_modifications(g, n, seed);
    return std::pair{r.graph, format_script(r.steps)};
  }, py::arg("graph"), py::arg("n"), py::arg("seed"));

  py::class_<Config>(m, "Config")
      .def_static("initial", [] { return Config{initial_config()}; })
      .def_static("parse", [](const std::string& text) { return Config{parse_graph(text).to_config()}; })
      .def("free", [](const Config& c, const std::string& v) { return Config{blow_up_free(c.cfg, VertexId(v))}; })
      .def("satellite", [](const Config& c, const std::string& u, const std::string& v) {
        return Config{blow_up_satellite(c.cfg, VertexId(u), VertexId(v))};
      })
      .def("apply_script", [](const Config& c, const std::string& script) {
        const auto steps = parse_blow_up_script(script);
        return Config{apply_blow_ups(c.cfg, steps)};
      })
      .def_property_readonly("graph", [](const Config& c) { return c.cfg.graph; })
      .def("multiplicities", &multiplicities)
      .def("violations", [](const Config& c) { return config_violations(c.cfg); })
      .def("to_text", [](const Config& c) { return format_config(c.cfg); })
      .def("edge_skeleton_point", [](const Config& c, const std::string& u, const std::string& v, const std::string& t) {
        const auto [b1, b2] = edge_skeleton_point(c.cfg, VertexId(u), VertexId(v), parse_rational(t));
        return std::pair{to_string(b1), to_string(b2)};
      });

  m.def("eval_monomial", [](const std::vector<std::string>& weights, const std::string& f) {
    return value_string(eval_monomial(Weights(rationals(weights)), parse_polynomial(f, weights.size())));
  });
  m.def("value_on_ideal", [](const std::vector<std::string>& weights, const std::vector<std::string>& gens) {
    return value_string(value_on_ideal(Weights(rationals(weights)), polynomials(gens, weights.size())));
  });
  m.def("normalize", [](const std::vector<std::string>& weights, std::optional<std::vector<std::string>> gens) {
    const std::size_t n = weights.size();
    const std::vector<Polynomial> ideal = gens ? polynomials(*gens, n) : maximal_ideal(n);
    const Weights n_beta = normalize(Weights(rationals(weights)), ideal);
    std::vector<std::string> out;
    for (const auto& b : n_beta.values()) out.push_back(to_string(b));
    return out;
  }, py::arg("weights"), py::arg("gens") = py::none());
  m.def("eval_iterated", [](std::size_t arity, const std::vector<std::size_t>& stages,
                            const std::string& f) -> std::optional<LexTuple> {
    std::vector<std::size_t> zero_based;
    for (std::size_t s : stages) zero_based.push_back(s - 1);
    const LexValue v = eval_iterated(IteratedOrderSpec(arity, zero_based), parse_polynomial(f, arity));
    if (v.is_infinite()) return std::nullopt;
    return v.value();
  });
  m.def("skeleton_weights", [](const std::string& b1, const std::string& b2, const std::string& t) {
    const auto [s1, s2] = skeleton_weights(Integer(b1), Integer(b2), parse_rational(t));
    return std::pair{to_string(s1), to_string(s2)};
  });
  m.def("retract_to_skeleton", [](const std::string& b1, const std::string& b2, const std::string& s1,
                                  const std::string& s2) {
    return to_string(retract_to_skeleton(Integer(b1), Integer(b2), parse_rational(s1), parse_rational(s2)));
  });
}

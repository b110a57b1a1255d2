#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "baltree/baltree.hpp"

namespace py = pybind11;
using namespace baltree;

namespace {

py::dict outcome_dict(const SolveOutcome& s, double lambda) {
  py::dict d;
  d["problem"] = to_string(s.problem);
  d["method"] = s.method;
  d["lambda"] = lambda;
  d["deleted_edge"] = s.deleted_edge;
  d["edge"] = py::make_tuple(s.edge_u, s.edge_v);
  d["fac1"] = s.fac1;
  d["fac2"] = s.fac2;
  d["transport"] = s.transport;
  d["f5"] = s.f5;
  d["objective"] = s.objective;
  d["warning"] = s.warning;
  return d;
}

SolveOutcome run(const WeightedTree& t, const std::string& problem, double lambda,
                 const std::string& method, int cap) {
  const SolverConfig cfg{lambda};
  cfg.validate();
  return solve_problem(cfg, t, parse_problem(problem), method, cap);
}

}  // namespace

PYBIND11_MODULE(_baltree, m) {
  m.doc() = "Balanced 2-median and 2-maxian solvers on weighted trees";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<WeightedTree>(m, "Tree")
      .def(py::init([](int n, const std::vector<std::tuple<int, int, double>>& edges,
                       const std::vector<double>& weights,
                       const std::vector<double>& service) {
             std::vector<VertexData> vd(static_cast<std::size_t>(n));
             if ((!weights.empty() && weights.size() != vd.size()) ||
                 (!service.empty() && service.size() != vd.size())) {
               throw ConfigError("weights and service must have n entries");
             }
             for (std::size_t i = 0; i < vd.size(); ++i) {
               if (!weights.empty()) vd[i].weight = weights[i];
               if (!service.empty()) vd[i].service_time = service[i];
             }
             std::vector<Edge> es;
             for (const auto& [u, v, len] : edges) es.push_back({u, v, len});
             return WeightedTree(std::move(vd), std::move(es));
           }),
           py::arg("n"), py::arg("edges"), py::arg("weights") = std::vector<double>{},
           py::arg("service") = std::vector<double>{})
      .def_property_readonly("n", &WeightedTree::size)
      .def_property_readonly("total_z", &WeightedTree::total_z)
      .def("edges", [](const WeightedTree& t) {
        std::vector<std::tuple<int, int, double>> out;
        for (const Edge& e : t.edges()) out.emplace_back(e.u, e.v, e.length);
        return out;
      })
      .def("weight", &WeightedTree::weight)
      .def("service_time", &WeightedTree::service_time)
      .def("render", &render_tree)
      .def("__len__", &WeightedTree::size);

  m.def("parse_tree", [](const std::string& text) { return parse_tree(text); }, py::arg("text"));
  m.def("load_tree", &load_tree, py::arg("path"));
  m.def(
      "generate",
      [](int n, std::uint64_t seed, double length_min, double length_max, double weight,
         double service) {
        GenSpec g;
        g.n = n;
        g.seed = seed;
        g.lengths = ValueDist::uniform(length_min, length_max);
        g.weights = ValueDist::fixed(weight);
        g.service = ValueDist::fixed(service);
        return gen_random_tree(g);
      },
      py::arg("n"), py::arg("seed") = 1, py::arg("length_min") = 0.01,
      py::arg("length_max") = 5.0, py::arg("weight") = 5.0, py::arg("service") = 1.0);

  m.def(
      "solve",
      [](const WeightedTree& t, const std::string& problem, double lambda,
         const std::string& method, int cap) {
        return outcome_dict(run(t, problem, lambda, method, cap), lambda);
      },
      py::arg("tree"), py::arg("problem") = "median", py::arg("lambda_") = 0.5,
      py::arg("method") = "", py::arg("cap") = kDefaultOracleCap,
      "Solve one instance. Methods: median edge-deletion|brute, maxian linear|cubic|brute.");

  m.def(
      "lambda_sweep",
      [](const WeightedTree& t, const std::string& problem, const std::vector<double>& lambdas,
         const std::string& method) {
        SweepOptions opt;
        opt.method = method;
        py::list out;
        for (const auto& r : lambda_sweep(t, parse_problem(problem), lambdas, opt)) {
          py::dict d;
          d["lambda"] = r.lambda;
          d["transport"] = r.transport;
          d["f5"] = r.f5;
          d["objective"] = r.objective;
          d["edge"] = py::make_tuple(r.edge_u, r.edge_v);
          d["fac1"] = r.fac1;
          d["fac2"] = r.fac2;
          d["runtime_ms"] = r.runtime_ms;
          out.append(d);
        }
        return out;
      },
      py::arg("tree"), py::arg("problem"), py::arg("lambdas"), py::arg("method") = "");

  m.def(
      "pareto_front",
      [](const WeightedTree& t, const std::string& problem, int grid, const std::string& method) {
        std::vector<std::pair<double, double>> out;
        for (const auto& p : pareto_front(t, parse_problem(problem), grid, method)) {
          out.emplace_back(p.transport, p.f5);
        }
        return out;
      },
      py::arg("tree"), py::arg("problem") = "median", py::arg("grid") = 11,
      py::arg("method") = "");

  m.def(
      "allocation_deviations",
      [](const WeightedTree& t, const std::string& problem, double lambda,
         const std::string& method) {
        const SolveOutcome s = run(t, problem, lambda, method, kDefaultOracleCap);
        const Problem p = parse_problem(problem);
        return allocation_report(t, make_assignment(t, s.deleted_edge, s.fac1, s.fac2, p))
            .vertices;
      },
      py::arg("tree"), py::arg("problem") = "median", py::arg("lambda_") = 0.5,
      py::arg("method") = "");
}

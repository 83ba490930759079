#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pairlab/channel.hpp"
#include "pairlab/cutmetrics.hpp"
#include "pairlab/graph.hpp"
#include "pairlab/group.hpp"
#include "pairlab/harness.hpp"
#include "pairlab/recover.hpp"

namespace py = pybind11;
using namespace pairlab;

namespace {

GraphModel model_from_args(const std::string& name, double q, double r,
                           int k_lattice) {
  if (name == "er") return GraphModel::erdos_renyi(q);
  if (name == "geo") return GraphModel::geometric(r);
  if (name == "sw") return GraphModel::small_world(k_lattice, q);
  if (name == "ring") return GraphModel::ring();
  if (name == "complete") return GraphModel::complete();
  throw std::invalid_argument("unknown model '" + name + "'");
}

py::dict result_to_dict(const RecoveryResult& r) {
  py::dict d;
  d["status"] = r.recovered() ? "recovered" : "failed";
  switch (r.reason) {
    case FailReason::None: d["reason"] = py::none(); break;
    case FailReason::Disconnected: d["reason"] = "disconnected"; break;
    case FailReason::Inconsistent: d["reason"] = "inconsistent"; break;
  }
  if (r.assignment)
    d["assignment"] = *r.assignment;
  else
    d["assignment"] = py::none();
  d["score"] = r.score;
  d["tie"] = r.diag.tie;
  d["pruned_edges"] = r.diag.pruned_edges;
  d["components"] = r.diag.components;
  d["converged"] = r.diag.converged;
  return d;
}

AlgorithmSpec alg_from_args(const std::string& name, int k, int restarts,
                            int refine_rounds, long long budget) {
  AlgorithmSpec a = AlgorithmSpec::parse(name);
  a.k = k;
  a.restarts = restarts;
  a.refine_rounds = refine_rounds;
  a.opts.search_budget = budget;
  a.opts.walk_budget = budget;
  return a;
}

}  // namespace

PYBIND11_MODULE(_pairlab, m) {
  m.doc() = "Exact-recovery experiments for pairwise measurements over Z_M";

  py::class_<GroupSpec>(m, "GroupSpec")
      .def(py::init<std::uint64_t>(), py::arg("modulus"))
      .def_readonly("modulus", &GroupSpec::modulus);

  py::class_<RelationOp>(m, "RelationOp")
      .def_static("difference", &RelationOp::difference)
      .def_static("sum", &RelationOp::sum)
      .def_static("affine", &RelationOp::affine, py::arg("a"), py::arg("b"))
      .def_static("parse_tag", &RelationOp::parse_tag)
      .def("tag", &RelationOp::tag);

  py::class_<Graph>(m, "Graph")
      .def_readonly("n", &Graph::n)
      .def_readonly("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("connected", &Graph::connected)
      .def_static("from_edges", &Graph::from_edges);

  py::class_<ObservationSet>(m, "ObservationSet")
      .def_readonly("modulus", &ObservationSet::modulus)
      .def_readonly("values", &ObservationSet::values)
      .def_readonly("op", &ObservationSet::op);

  m.def("validate_op", &validate_op);
  m.def("op_apply", &op_apply);
  m.def(
      "relation_matrix",
      [](const Assignment& x, const RelationOp& op, const GroupSpec& g) {
        auto flat = relation_matrix(x, op, g);
        std::vector<Assignment> rows(x.size(), Assignment(x.size()));
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < x.size(); ++j)
            rows[i][j] = flat[i * x.size() + j];
        return rows;
      },
      py::arg("x"), py::arg("op"), py::arg("group"));

  m.def(
      "gen_graph",
      [](const std::string& model, int n, std::uint64_t seed, double q,
         double r, int k_lattice) {
        return gen_graph(model_from_args(model, q, r, k_lattice), n, seed);
      },
      py::arg("model"), py::arg("n"), py::arg("seed"), py::arg("q") = 0.5,
      py::arg("r") = 0.5, py::arg("k_lattice") = 4);
  m.def("degree_stats", [](const Graph& g) {
    DegreeStats s = degree_stats(g);
    return py::make_tuple(s.d_min, s.d_max, s.mean);
  });
  m.def("min_cut", [](const Graph& g) {
    MinCutResult r = min_cut(g);
    return py::make_tuple(r.value, r.connected);
  });
  m.def("edge_expansion", [](const Graph& g) {
    ExpansionResult r = edge_expansion(g);
    py::dict d;
    d["value"] = r.value;
    d["exact"] = r.exact;
    if (r.exact) {
      d["num"] = r.num;
      d["den"] = r.den;
    }
    return d;
  });

  m.def("count_Nk", &count_Nk, py::arg("graph"), py::arg("k"));
  m.def("alpha_exponents", [](const Graph& g) {
    AlphaResult a = alpha_exponents(g);
    return py::make_tuple(a.alpha_lb, a.alpha_ub);
  });
  m.def("beta_metric", &beta_metric, py::arg("graph"), py::arg("K"));

  m.def("corrupt", &corrupt, py::arg("x"), py::arg("op"), py::arg("graph"),
        py::arg("group"), py::arg("p"), py::arg("seed"));
  m.def("effective_accuracy", &effective_accuracy, py::arg("p"), py::arg("M"));

  m.def("compatibility_score", &compatibility_score, py::arg("graph"),
        py::arg("obs"), py::arg("x"), py::arg("op"), py::arg("group"));
  m.def(
      "recover_exhaustive",
      [](const Graph& g, const ObservationSet& obs, const RelationOp& op,
         const GroupSpec& gs, long long budget) {
        RecoverOptions opts;
        opts.search_budget = budget;
        return result_to_dict(recover_exhaustive(g, obs, op, gs, opts));
      },
      py::arg("graph"), py::arg("obs"), py::arg("op"), py::arg("group"),
      py::arg("budget") = 100'000'000);
  m.def(
      "recover_cycle",
      [](const Graph& g, const ObservationSet& obs, const GroupSpec& gs,
         int k, long long budget) {
        RecoverOptions opts;
        opts.walk_budget = budget;
        return result_to_dict(recover_cycle(g, obs, gs, k, opts));
      },
      py::arg("graph"), py::arg("obs"), py::arg("group"), py::arg("k") = 3,
      py::arg("budget") = 100'000'000);
  m.def(
      "recover_spectral",
      [](const Graph& g, const ObservationSet& obs, const GroupSpec& gs,
         int refine_rounds) {
        return result_to_dict(recover_spectral(g, obs, gs, refine_rounds));
      },
      py::arg("graph"), py::arg("obs"), py::arg("group"),
      py::arg("refine_rounds") = 20);
  m.def(
      "recover_local_search",
      [](const Graph& g, const ObservationSet& obs, const RelationOp& op,
         const GroupSpec& gs, int restarts, std::uint64_t seed) {
        return result_to_dict(
            recover_local_search(g, obs, op, gs, restarts, seed));
      },
      py::arg("graph"), py::arg("obs"), py::arg("op"), py::arg("group"),
      py::arg("restarts") = 8, py::arg("seed") = 0);
  m.def("success", &success, py::arg("xhat"), py::arg("xtrue"), py::arg("op"),
        py::arg("group"));

  m.def(
      "run_trials",
      [](const std::string& model, int n, std::uint64_t M,
         const std::string& op_tag, double p, const std::string& algorithm,
         int trials, std::uint64_t master_seed, double q, double r,
         int k_lattice, int k, int restarts, int refine_rounds,
         long long budget, bool fixed_graph) {
        TrialConfig cfg;
        cfg.model = model_from_args(model, q, r, k_lattice);
        cfg.n = n;
        cfg.M = M;
        cfg.op = RelationOp::parse_tag(op_tag);
        cfg.p = p;
        cfg.alg = alg_from_args(algorithm, k, restarts, refine_rounds, budget);
        cfg.master_seed = master_seed;
        cfg.fixed_graph = fixed_graph;
        RunResult rr = run_trials(cfg, trials);
        py::list outcomes;
        for (const auto& o : rr.outcomes) {
          py::dict d;
          d["success"] = o.success;
          d["score"] = o.score;
          d["error"] = o.error ? py::cast(o.error_msg) : py::none();
          outcomes.append(d);
        }
        return py::make_tuple(rr.success_count, outcomes);
      },
      py::arg("model"), py::arg("n"), py::arg("M"), py::arg("op"),
      py::arg("p"), py::arg("algorithm"), py::arg("trials"),
      py::arg("master_seed"), py::arg("q") = 0.5, py::arg("r") = 0.5,
      py::arg("k_lattice") = 4, py::arg("k") = 3, py::arg("restarts") = 8,
      py::arg("refine_rounds") = 20, py::arg("budget") = 100'000'000,
      py::arg("fixed_graph") = false);

  m.def(
      "estimate_threshold",
      [](const std::string& model, int n, std::uint64_t M,
         const std::string& op_tag, const std::string& algorithm,
         const std::vector<double>& p_grid, int trials,
         std::uint64_t master_seed, double q, double r, int k_lattice, int k,
         int restarts, int refine_rounds, long long budget) {
        TrialConfig cfg;
        cfg.model = model_from_args(model, q, r, k_lattice);
        cfg.n = n;
        cfg.M = M;
        cfg.op = RelationOp::parse_tag(op_tag);
        cfg.alg = alg_from_args(algorithm, k, restarts, refine_rounds, budget);
        cfg.master_seed = master_seed;
        ThresholdEstimate est = estimate_threshold(cfg, p_grid, trials);
        py::dict d;
        d["p_hat"] = est.p_hat;
        d["ci_low"] = est.ci_low;
        d["ci_high"] = est.ci_high;
        d["crossed"] = est.crossed;
        d["grid"] = est.grid;
        d["success_fraction"] = est.success_fraction;
        return d;
      },
      py::arg("model"), py::arg("n"), py::arg("M"), py::arg("op"),
      py::arg("algorithm"), py::arg("p_grid"), py::arg("trials"),
      py::arg("master_seed"), py::arg("q") = 0.5, py::arg("r") = 0.5,
      py::arg("k_lattice") = 4, py::arg("k") = 3, py::arg("restarts") = 8,
      py::arg("refine_rounds") = 20, py::arg("budget") = 100'000'000);

  m.def(
      "predicted_rate",
      [](int n, std::uint64_t M, double d_max, const std::string& kind) {
        PredictedRate r = predicted_rate(n, M, d_max, kind);
        py::dict d;
        d["regime"] = r.regime;
        d["p_predicted"] = r.p_predicted;
        d["fano_lower_bound"] = r.fano_lower_bound;
        return d;
      },
      py::arg("n"), py::arg("M"), py::arg("d_max"),
      py::arg("kind") = "generic");
}

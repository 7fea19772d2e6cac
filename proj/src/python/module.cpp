#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "subcover/bounds.hpp"
#include "subcover/cover.hpp"
#include "subcover/exact.hpp"
#include "subcover/experiment.hpp"
#include "subcover/ingest.hpp"
#include "subcover/kcsm.hpp"
#include "subcover/objectives.hpp"
#include "subcover/oracle.hpp"
#include "subcover/universe.hpp"
#include "subcover/usm.hpp"

namespace py = pybind11;
using namespace subcover;

namespace {

// Lets Python classes implement the value oracle.
class PyOracle : public SubmodularOracle {
 public:
  using SubmodularOracle::SubmodularOracle;

  std::size_t ground_size() const override {
    PYBIND11_OVERRIDE_PURE(std::size_t, SubmodularOracle, ground_size);
  }

  double value(ElementSpan subset) const override {
    std::vector<ElementId> copy(subset.begin(), subset.end());
    PYBIND11_OVERRIDE_PURE(double, SubmodularOracle, value, copy);
  }
};

CostedUniverse make_universe(std::vector<ElementId> order, std::vector<double> costs) {
  return CostedUniverse(std::move(order), std::move(costs));
}

}  // namespace

PYBIND11_MODULE(subcover, m) {
  m.doc() =
      "Streaming bicriteria solvers for submodular cover and budget-constrained "
      "submodular maximization";

  py::class_<SubmodularOracle, PyOracle>(m, "SubmodularOracle")
      .def(py::init<>())
      .def("ground_size", &SubmodularOracle::ground_size)
      .def("value",
           [](const SubmodularOracle& f, std::vector<ElementId> subset) {
             return f.value(subset);
           },
           py::arg("subset"));

  m.def("modular_oracle",
        [](std::vector<double> values) -> std::unique_ptr<SubmodularOracle> {
          return std::make_unique<ModularOracle>(std::move(values));
        },
        py::arg("values"), "f(X) = sum of per-element values");

  m.def("cut_oracle",
        [](std::size_t n, std::vector<std::tuple<ElementId, ElementId, double>> edges)
            -> std::unique_ptr<SubmodularOracle> {
          CutGraph g;
          g.vertex_count = n;
          for (auto& [u, v, w] : edges) g.edges.push_back({u, v, w});
          return std::make_unique<GraphCutOracle>(std::move(g));
        },
        py::arg("vertex_count"), py::arg("edges"),
        "f(X) = total weight of edges crossing the (X, V\\X) cut");

  m.def("coverage_oracle",
        [](std::vector<std::vector<std::int32_t>> item_tags, std::size_t vocab)
            -> std::unique_ptr<SubmodularOracle> {
          return std::make_unique<CoverageOracle>(std::move(item_tags), vocab);
        },
        py::arg("item_tags"), py::arg("vocab_size"), "f(X) = number of distinct covered tags");

  m.def("diverse_oracle",
        [](std::vector<std::vector<std::int32_t>> item_tags, std::size_t vocab,
           double gamma_div, bool literal_similarity) -> std::unique_ptr<SubmodularOracle> {
          TaggedCorpus c;
          c.item_tags = std::move(item_tags);
          for (auto& tags : c.item_tags) {
            std::sort(tags.begin(), tags.end());
            tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
          }
          c.tag_names.resize(vocab);
          for (std::size_t i = 0; i < vocab; ++i) c.tag_names[i] = "t" + std::to_string(i);
          c.similarity =
              literal_similarity ? SimilarityMode::kInverseJaccard : SimilarityMode::kJaccard;
          c.gamma_div = gamma_div >= 0.0 ? gamma_div : default_gamma_div(c);
          return std::make_unique<DiverseSummaryOracle>(std::move(c));
        },
        py::arg("item_tags"), py::arg("vocab_size"), py::arg("gamma_div") = -1.0,
        py::arg("literal_similarity") = false,
        "f(X) = covered tags minus a weighted pairwise-similarity penalty, clamped at 0");

  py::class_<CostedUniverse>(m, "Universe")
      .def(py::init(&make_universe), py::arg("order"), py::arg("costs"))
      .def_static("uniform", &CostedUniverse::uniform, py::arg("n"))
      .def("size", &CostedUniverse::size)
      .def("cost", &CostedUniverse::cost, py::arg("element"))
      .def("total_cost", &CostedUniverse::total_cost)
      .def_property_readonly("order",
                             [](const CostedUniverse& u) {
                               return std::vector<ElementId>(u.order().begin(), u.order().end());
                             });

  py::class_<UsmAlgorithm>(m, "UsmAlgorithm")
      .def_property_readonly("gamma", &UsmAlgorithm::gamma)
      .def_property_readonly("name", &UsmAlgorithm::name)
      .def("query_bound", &UsmAlgorithm::query_bound, py::arg("m"));

  m.def("usm", &parse_usm, py::arg("name"), py::arg("repetitions") = 50, py::arg("seed") = 0,
        "maximization subroutine by name: dg | dg-det | rs | ls | exact");

  m.def("run_usm",
        [](const UsmAlgorithm& a, const SubmodularOracle& f, std::vector<ElementId> elements) {
          UsmResult r = a.run(f, elements);
          return py::make_tuple(r.set, r.value);
        },
        py::arg("algorithm"), py::arg("oracle"), py::arg("elements"),
        "returns (set, value) of the subroutine over the given elements");

  py::class_<RunMetrics>(m, "RunMetrics")
      .def_readonly("queries", &RunMetrics::queries)
      .def_readonly("queries_uncached", &RunMetrics::queries_uncached)
      .def_readonly("marginal_gains", &RunMetrics::marginal_gains)
      .def_readonly("usm_runs", &RunMetrics::usm_runs)
      .def_readonly("stream_passes", &RunMetrics::stream_passes)
      .def_readonly("prelim_passes", &RunMetrics::prelim_passes)
      .def_readonly("elements_consumed", &RunMetrics::elements_consumed)
      .def_readonly("peak_stored_cost", &RunMetrics::peak_stored_cost)
      .def_readonly("per_element_queries", &RunMetrics::per_element_queries)
      .def_readonly("stored_cost_trace", &RunMetrics::stored_cost_trace)
      .def_readonly("window_trace", &RunMetrics::window_trace)
      .def_readonly("final_lower_bound", &RunMetrics::final_lower_bound)
      .def_readonly("final_upper_bound", &RunMetrics::final_upper_bound)
      .def_property_readonly("total_passes", &RunMetrics::total_passes);

  py::class_<BicriteriaSolution>(m, "Solution")
      .def_readonly("set", &BicriteriaSolution::set)
      .def_readonly("value", &BicriteriaSolution::value)
      .def_readonly("cost", &BicriteriaSolution::cost)
      .def_readonly("feasible", &BicriteriaSolution::feasible)
      .def_readonly("value_bound", &BicriteriaSolution::value_bound)
      .def_readonly("certified_guess", &BicriteriaSolution::certified_guess)
      .def_readonly("metrics", &BicriteriaSolution::metrics);

  m.def("cover_multi",
        [](const CostedUniverse& u, const SubmodularOracle& f, double tau, double epsilon,
           const UsmAlgorithm& usm) { return multi(CoverInstance{u, f, tau}, epsilon, usm); },
        py::arg("universe"), py::arg("oracle"), py::arg("tau"), py::arg("epsilon"),
        py::arg("usm"),
        "multi-pass cover: geometric ladder of cost guesses, one buffered pass per guess");

  m.def("cover_single",
        [](const CostedUniverse& u, const SubmodularOracle& f, double tau, double epsilon,
           double upper_bound, const UsmAlgorithm& usm, bool lazy_usm) {
          SingleOptions opts;
          opts.lazy_usm = lazy_usm;
          return single(CoverInstance{u, f, tau}, epsilon, upper_bound, usm, opts);
        },
        py::arg("universe"), py::arg("oracle"), py::arg("tau"), py::arg("epsilon"),
        py::arg("upper_bound"), py::arg("usm"), py::arg("lazy_usm") = true,
        "one-pass cover: parallel cost guesses inside a tightening window");

  m.def("kcsm_single_max",
        [](const CostedUniverse& u, const SubmodularOracle& f, double kappa, double epsilon,
           const UsmAlgorithm& usm) {
          return single_max(KcsmInstance{u, f, kappa}, epsilon, usm);
        },
        py::arg("universe"), py::arg("oracle"), py::arg("kappa"), py::arg("epsilon"),
        py::arg("usm"),
        "one-pass budgeted maximization; cost may exceed the budget by the stored-cost factor");

  py::class_<ExactAnswer>(m, "ExactAnswer")
      .def_readonly("set", &ExactAnswer::set)
      .def_readonly("value", &ExactAnswer::value)
      .def_readonly("cost", &ExactAnswer::cost)
      .def_readonly("feasible", &ExactAnswer::feasible)
      .def_readonly("enumerated", &ExactAnswer::enumerated);

  m.def("exact_cover_opt",
        [](const CostedUniverse& u, const SubmodularOracle& f, double tau) {
          return exact_sc_opt(CoverInstance{u, f, tau});
        },
        py::arg("universe"), py::arg("oracle"), py::arg("tau"),
        "brute-force minimum-cost subset reaching tau (n <= 20)");

  m.def("exact_budget_opt",
        [](const CostedUniverse& u, const SubmodularOracle& f, double kappa) {
          return exact_kcsm_opt(KcsmInstance{u, f, kappa});
        },
        py::arg("universe"), py::arg("oracle"), py::arg("kappa"),
        "brute-force maximum-value subset within the budget (n <= 20)");

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("kind", &BoundReport::kind)
      .def_readonly("stored_cost_factor", &BoundReport::stored_cost_factor)
      .def_readonly("pass_bound_raw", &BoundReport::pass_bound_raw)
      .def_readonly("pass_bound", &BoundReport::pass_bound)
      .def_readonly("cost_bound", &BoundReport::cost_bound)
      .def_readonly("peak_stored_formula", &BoundReport::peak_stored_formula)
      .def_readonly("peak_stored_bound", &BoundReport::peak_stored_bound)
      .def_readonly("query_bound", &BoundReport::query_bound)
      .def_readonly("per_element_query_bound", &BoundReport::per_element_query_bound)
      .def_readonly("guess_count_bound", &BoundReport::guess_count_bound);

  m.def("stored_cost_factor", &stored_cost_factor, py::arg("epsilon"));

  m.def("resource_bounds",
        [](const std::string& kind, const CostedUniverse& u, const SubmodularOracle& f,
           double epsilon, double tau, double x, double kappa, const UsmAlgorithm& usm) {
          InstanceStats s = compute_instance_stats(u, f);
          return resource_bounds(kind, s, epsilon, tau, x, kappa, usm);
        },
        py::arg("kind"), py::arg("universe"), py::arg("oracle"), py::arg("epsilon"),
        py::arg("tau") = 0.0, py::arg("x") = 0.0, py::arg("kappa") = 0.0,
        py::arg("usm") = parse_usm("dg", 50, 0),
        "predicted resource bounds: kind is multi | single | singlemax");
}

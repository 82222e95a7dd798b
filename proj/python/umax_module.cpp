// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "umax/constants.hpp"
#include "umax/search.hpp"
#include "umax/simulation.hpp"
#include "umax/stats.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace umax;

namespace {

GapVector gaps_of(const std::vector<double>& gaps) { return GapVector::from_gaps(gaps); }

}  // namespace

PYBIND11_MODULE(_umax, m) {
  m.doc() = "U-max statistics of random polygons on the unit circle";
  m.attr("__version__") = UMAX_VERSION;

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::enum_<KernelKind>(m, "KernelKind")
      .value("InscribedPerimeter", KernelKind::InscribedPerimeter)
      .value("InscribedArea", KernelKind::InscribedArea)
      .value("CircumscribedPerimeter", KernelKind::CircumscribedPerimeter)
      .value("CircumscribedArea", KernelKind::CircumscribedArea);

  py::enum_<MethodChoice>(m, "Method")
      .value("BruteForce", MethodChoice::BruteForce)
      .value("CyclicDP", MethodChoice::CyclicDP)
      .value("Auto", MethodChoice::Auto);

  m.def("canonicalize",
        [](const std::vector<double>& angles) {
          const GapVector g = canonicalize(angles);
          return std::vector<double>(g.gaps().begin(), g.gaps().end());
        },
        "angles"_a, "Sorted circular gaps of an angle sample.");
  m.def("kernel_eval",
        [](KernelKind kind, const std::vector<double>& gaps) {
          return kernel_eval(kind, gaps_of(gaps));
        },
        "kind"_a, "gaps"_a);
  m.def("deficit",
        [](KernelKind kind, const std::vector<double>& gaps) {
          return deficit(kind, gaps_of(gaps));
        },
        "kind"_a, "gaps"_a);
  m.def("extremal_value", &extremal_value, "kind"_a, "m"_a);

  py::class_<LimitLaw>(m, "LimitLaw")
      .def(py::init(&LimitLaw::make), "kind"_a, "m"_a)
      .def_readonly("kind", &LimitLaw::kind)
      .def_readonly("m", &LimitLaw::m)
      .def_readonly("extremal_value", &LimitLaw::extremal_value)
      .def_readonly("weibull_exponent", &LimitLaw::weibull_exponent)
      .def_readonly("constant", &LimitLaw::constant)
      .def_readonly("scaling_exponent", &LimitLaw::scaling_exponent);

  m.def("limit_constant", &limit_constant, "kind"_a, "m"_a);
  m.def("asymptotic_constant", &asymptotic_constant, "kind"_a, "m"_a);
  m.def("tail_coefficient", &tail_coefficient, "kind"_a, "m"_a);
  m.def("form_eigenvalues", &form_eigenvalues, "m"_a);
  m.def("sine_product", &sine_product, "m"_a);
  m.def("ball_volume", &ball_volume, "d"_a);
  m.def("limit_cdf", &limit_cdf, "law"_a, "t"_a);
  m.def("normalize_stat", &normalize_stat, "law"_a, "n"_a, "raw"_a);
  m.def("inverse_transform", &inverse_transform, "law"_a, "n"_a, "t"_a);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("value", &SearchResult::value)
      .def_readonly("deficit", &SearchResult::deficit)
      .def_readonly("subset", &SearchResult::subset)
      .def_property_readonly("method",
                             [](const SearchResult& r) { return std::string(to_string(r.method)); });

  m.def("umax_bruteforce",
        [](KernelKind kind, const std::vector<double>& angles, int m, int cap) {
          return umax_bruteforce(kind, angles, m, cap);
        },
        "kind"_a, "angles"_a, "m"_a, "cap"_a = kDefaultBruteForceCap);
  m.def("umax_cyclic_dp",
        [](KernelKind kind, const std::vector<double>& angles, int m) {
          return umax_cyclic_dp(kind, angles, m);
        },
        "kind"_a, "angles"_a, "m"_a);

  m.def("run_experiment",
        [](KernelKind kind, int m, int n, long long replications, std::uint64_t seed,
           MethodChoice method, int threads, double budget) {
          ExperimentConfig cfg{kind, m, n, replications, seed, method, threads, budget};
          py::gil_scoped_release release;
          return run_experiment(cfg);
        },
        "kind"_a, "m"_a, "n"_a, "replications"_a, "seed"_a = 0,
        "method"_a = MethodChoice::Auto, "threads"_a = 0, "budget"_a = kDefaultBudget);

  py::class_<TailEstimate>(m, "TailEstimate")
      .def_readonly("m", &TailEstimate::m)
      .def_readonly("s", &TailEstimate::s)
      .def_readonly("trials", &TailEstimate::trials)
      .def_readonly("hits", &TailEstimate::hits)
      .def_readonly("p_hat", &TailEstimate::p_hat)
      .def_readonly("ci_low", &TailEstimate::ci_low)
      .def_readonly("ci_high", &TailEstimate::ci_high)
      .def_readonly("lemma_ratio", &TailEstimate::lemma_ratio)
      .def_readonly("lemma_target", &TailEstimate::lemma_target)
      .def_readonly("warning", &TailEstimate::warning);

  m.def("estimate_tail",
        [](KernelKind kind, int m, double s, long long trials, std::uint64_t seed, int threads) {
          py::gil_scoped_release release;
          return estimate_tail(kind, m, s, trials, seed, threads);
        },
        "kind"_a, "m"_a, "s"_a, "trials"_a, "seed"_a = 0, "threads"_a = 0);

  m.def("ks_statistic",
        [](const std::vector<double>& values, const LimitLaw& law) {
          return ks_statistic(EmpiricalDistribution(values), law);
        },
        "values"_a, "law"_a);
  m.def("wilson_ci", &wilson_ci, "hits"_a, "trials"_a, "level"_a = 0.99);

  py::class_<RateFit>(m, "RateFit")
      .def_readonly("pairs", &RateFit::pairs)
      .def_readonly("exponent", &RateFit::exponent)
      .def_readonly("intercept", &RateFit::intercept)
      .def_readonly("r_squared", &RateFit::r_squared);
  m.def("rate_fit",
        [](const std::vector<std::pair<double, double>>& pairs) { return rate_fit(pairs); },
        "pairs"_a);
}

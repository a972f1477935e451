// Copyright 2026 The RDP Accounting Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "rdp/accountant.hpp"
#include "rdp/distribution.hpp"
#include "rdp/divergence.hpp"
#include "rdp/mechanisms.hpp"
#include "rdp/oracle.hpp"
#include "rdp/order.hpp"

namespace py = pybind11;

namespace {

std::string order_repr(const rdp::Order& a) {
  if (a.is_one()) return "Order.one()";
  if (a.is_infinity()) return "Order.infinity()";
  return "Order.finite(" + std::to_string(a.value()) + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Renyi differential privacy accounting";

  py::class_<rdp::Order>(m, "Order")
      .def_static("one", &rdp::Order::one)
      .def_static("infinity", &rdp::Order::infinity)
      .def_static("finite", &rdp::Order::finite, py::arg("alpha"))
      .def_static("from_value", &rdp::Order::from_value, py::arg("alpha"))
      .def_property_readonly("value", &rdp::Order::value)
      .def("is_one", &rdp::Order::is_one)
      .def("is_finite", &rdp::Order::is_finite)
      .def("is_infinity", &rdp::Order::is_infinity)
      .def("__eq__",
           [](const rdp::Order& a, const rdp::Order& b) { return a == b; })
      .def("__lt__",
           [](const rdp::Order& a, const rdp::Order& b) { return a < b; })
      .def("__hash__",
           [](const rdp::Order& a) { return py::hash(py::float_(a.value())); })
      .def("__repr__", &order_repr);

  py::class_<rdp::DiscreteDistribution>(m, "DiscreteDistribution")
      .def(py::init<std::vector<double>, std::vector<std::string>>(),
           py::arg("masses"), py::arg("labels") = std::vector<std::string>{})
      .def_static("bernoulli", &rdp::DiscreteDistribution::bernoulli,
                  py::arg("p"))
      .def("size", &rdp::DiscreteDistribution::size)
      .def("mass", &rdp::DiscreteDistribution::mass, py::arg("i"))
      .def("masses", [](const rdp::DiscreteDistribution& d) {
        return std::vector<double>(d.masses().begin(), d.masses().end());
      });

  m.def(
      "renyi_divergence",
      [](const rdp::DiscreteDistribution& p, const rdp::DiscreteDistribution& q,
         const rdp::Order& a) { return rdp::renyi_divergence(p, q, a).value(); },
      py::arg("p"), py::arg("q"), py::arg("order"));

  py::class_<rdp::QuadratureSettings>(m, "QuadratureSettings")
      .def(py::init([](double lower, double upper, int max_subdivisions,
                       double abs_tolerance) {
             return rdp::QuadratureSettings{lower, upper, max_subdivisions,
                                            abs_tolerance};
           }),
           py::arg("lower"), py::arg("upper"),
           py::arg("max_subdivisions") = 2000,
           py::arg("abs_tolerance") = 1e-10)
      .def_readwrite("lower", &rdp::QuadratureSettings::lower)
      .def_readwrite("upper", &rdp::QuadratureSettings::upper)
      .def_readwrite("max_subdivisions",
                     &rdp::QuadratureSettings::max_subdivisions)
      .def_readwrite("abs_tolerance", &rdp::QuadratureSettings::abs_tolerance);

  m.def(
      "renyi_divergence_quadrature",
      [](const rdp::LogDensity& log_p, const rdp::LogDensity& log_q,
         const rdp::Order& a, const rdp::QuadratureSettings& settings) {
        return rdp::renyi_divergence_quadrature(log_p, log_q, a, settings)
            .value();
      },
      py::arg("log_p"), py::arg("log_q"), py::arg("order"),
      py::arg("settings"));

  py::class_<rdp::RandomizedResponse>(m, "RandomizedResponse")
      .def(py::init([](double p) {
             rdp::RandomizedResponse s{p};
             rdp::validate(s);
             return s;
           }),
           py::arg("p"))
      .def_readonly("p", &rdp::RandomizedResponse::p);

  py::class_<rdp::Laplace>(m, "Laplace")
      .def(py::init([](double lambda) {
             rdp::Laplace s{lambda};
             rdp::validate(s);
             return s;
           }),
           py::arg("lam"))
      .def_readonly("lam", &rdp::Laplace::lambda);

  py::class_<rdp::Gaussian>(m, "Gaussian")
      .def(py::init([](double sigma) {
             rdp::Gaussian s{sigma};
             rdp::validate(s);
             return s;
           }),
           py::arg("sigma"))
      .def_readonly("sigma", &rdp::Gaussian::sigma);

  py::class_<rdp::PureDp>(m, "PureDp")
      .def(py::init([](double eps) {
             rdp::PureDp s{eps};
             rdp::validate(s);
             return s;
           }),
           py::arg("eps"))
      .def_readonly("eps", &rdp::PureDp::eps);

  m.def(
      "rdp_epsilon",
      [](const rdp::MechanismSpec& spec, const rdp::Order& a) {
        return rdp::rdp_epsilon(spec, a).value();
      },
      py::arg("mechanism"), py::arg("order"));
  m.def(
      "pure_dp_epsilon",
      [](const rdp::MechanismSpec& spec) {
        return rdp::pure_dp_epsilon(spec).value();
      },
      py::arg("mechanism"));

  py::class_<rdp::OrdersGrid>(m, "OrdersGrid")
      .def(py::init<std::vector<rdp::Order>>(), py::arg("orders"))
      .def_static("default_grid",
                  []() { return rdp::OrdersGrid::default_grid(); })
      .def("orders", [](const rdp::OrdersGrid& g) {
        return std::vector<rdp::Order>(g.orders().begin(), g.orders().end());
      });

  py::class_<rdp::RdpCurve>(m, "RdpCurve")
      .def(py::init<>())
      .def(py::init(
               [](const std::vector<std::pair<rdp::MechanismSpec, long>>& cs) {
                 std::vector<rdp::RdpCurve::Component> components;
                 components.reserve(cs.size());
                 for (const auto& [spec, count] : cs) {
                   components.push_back({spec, count});
                 }
                 return rdp::RdpCurve(std::move(components));
               }),
           py::arg("components"))
      .def(
          "evaluate",
          [](const rdp::RdpCurve& c, const rdp::Order& a) {
            return c.evaluate(a).value();
          },
          py::arg("order"));

  py::class_<rdp::EpsDelta>(m, "EpsDelta")
      .def_readonly("eps", &rdp::EpsDelta::eps)
      .def_readonly("delta", &rdp::EpsDelta::delta)
      .def_readonly("alpha", &rdp::EpsDelta::alpha);

  py::class_<rdp::ProbabilityInterval>(m, "ProbabilityInterval")
      .def_readonly("lower", &rdp::ProbabilityInterval::lower)
      .def_readonly("upper", &rdp::ProbabilityInterval::upper)
      .def_readonly("alpha_lower", &rdp::ProbabilityInterval::alpha_lower)
      .def_readonly("alpha_upper", &rdp::ProbabilityInterval::alpha_upper)
      .def_readonly("vacuous_upper", &rdp::ProbabilityInterval::vacuous_upper);

  m.def(
      "compose",
      [](const std::vector<rdp::RdpCurve>& curves) {
        return rdp::compose(curves);
      },
      py::arg("curves"));
  m.def(
      "group_privacy",
      [](const rdp::RdpCurve& curve, int c, const rdp::Order& a) {
        auto [order, eps] = rdp::group_privacy(curve, c, a);
        return std::make_pair(order, eps.value());
      },
      py::arg("curve"), py::arg("c"), py::arg("order"));
  m.def("to_eps_delta", &rdp::to_eps_delta, py::arg("curve"), py::arg("order"),
        py::arg("delta"));
  m.def("optimal_eps_for_delta", &rdp::optimal_eps_for_delta, py::arg("curve"),
        py::arg("delta"), py::arg("grid"), py::arg("continuous") = false);
  m.def("upper_probability_bound", &rdp::upper_probability_bound,
        py::arg("curve"), py::arg("order"), py::arg("q"));
  m.def("lower_probability_bound", &rdp::lower_probability_bound,
        py::arg("curve"), py::arg("order"), py::arg("q"));
  m.def("optimal_upper_probability_bound",
        &rdp::optimal_upper_probability_bound, py::arg("curve"), py::arg("q"),
        py::arg("grid"), py::arg("continuous") = false);
  m.def("probability_interval", &rdp::probability_interval, py::arg("curve"),
        py::arg("q"), py::arg("grid"), py::arg("continuous") = false);
  m.def("advanced_composition_bound", &rdp::advanced_composition_bound,
        py::arg("eps"), py::arg("n"), py::arg("q"));
  m.def("advanced_eps_delta", &rdp::advanced_eps_delta, py::arg("eps"),
        py::arg("n"), py::arg("delta"));
  m.def("drv_eps_delta", &rdp::drv_eps_delta, py::arg("eps"), py::arg("k"),
        py::arg("delta_prime"));
  m.def("drv_optimal_probability_bound", &rdp::drv_optimal_probability_bound,
        py::arg("eps"), py::arg("n"), py::arg("q"));
  m.def("naive_eps", &rdp::naive_eps, py::arg("eps"), py::arg("n"));
  m.def("bayes_moment_bound", &rdp::bayes_moment_bound, py::arg("curve"),
        py::arg("order"));

  auto oracle = m.def_submodule("oracle", "Independent verification oracles");
  oracle.def(
      "product_compose",
      [](const std::vector<rdp::DiscreteDistribution>& ps,
         const std::vector<rdp::DiscreteDistribution>& qs) {
        return rdp::oracle::product_compose(ps, qs);
      },
      py::arg("ps"), py::arg("qs"));
  py::class_<rdp::oracle::PreservationReport>(oracle, "PreservationReport")
      .def_readonly("holds", &rdp::oracle::PreservationReport::holds)
      .def_readonly("min_slack", &rdp::oracle::PreservationReport::min_slack)
      .def_readonly("witness_subset",
                    &rdp::oracle::PreservationReport::witness_subset)
      .def_readonly("witness_probability",
                    &rdp::oracle::PreservationReport::witness_probability)
      .def_readonly("witness_bound",
                    &rdp::oracle::PreservationReport::witness_bound);
  oracle.def("exhaustive_preservation_check",
             &rdp::oracle::exhaustive_preservation_check, py::arg("p"),
             py::arg("q"), py::arg("order"));
  oracle.def("grid_optimize", &rdp::oracle::grid_optimize,
             py::arg("objective"), py::arg("lo"), py::arg("hi"),
             py::arg("points"));
}

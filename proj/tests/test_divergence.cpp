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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rdp/distribution.hpp"
#include "rdp/divergence.hpp"
#include "rdp/errors.hpp"
#include "rdp/mechanisms.hpp"

namespace {

using rdp::DiscreteDistribution;
using rdp::Order;
using rdp::QuadratureSettings;
using rdp::renyi_divergence;
using rdp::renyi_divergence_quadrature;

rdp::LogDensity laplace_log_density(double mu, double lambda) {
  return [mu, lambda](double x) {
    return -std::abs(x - mu) / lambda - std::log(2.0 * lambda);
  };
}

rdp::LogDensity gaussian_log_density(double mu, double sigma) {
  return [mu, sigma](double x) {
    const double z = (x - mu) / sigma;
    return -0.5 * z * z -
           std::log(sigma * std::sqrt(2.0 * std::numbers::pi));
  };
}

}  // namespace

TEST_SUITE("divergence") {

TEST_CASE("order-2 divergence of close bernoullis") {
  const auto p = DiscreteDistribution::bernoulli(0.51);
  const auto q = DiscreteDistribution::bernoulli(0.49);
  // mpmath, 20 digits: log(0.51^2/0.49 + 0.49^2/0.51)
  CHECK(std::abs(renyi_divergence(p, q, Order::finite(2.0)).value() -
                 0.0015993605968218325489) < 1e-12);
}

TEST_CASE("order 1 is the kl divergence with expectation over p") {
  const double pv = 0.51;
  const auto p = DiscreteDistribution::bernoulli(pv);
  const auto q = DiscreteDistribution::bernoulli(1.0 - pv);
  const double expected = (2.0 * pv - 1.0) * std::log(pv / (1.0 - pv));
  CHECK(std::abs(renyi_divergence(p, q, Order::one()).value() - expected) <
        1e-14);
}

TEST_CASE("order infinity is the max log ratio over supp(q)") {
  const auto p = DiscreteDistribution::bernoulli(0.51);
  const auto q = DiscreteDistribution::bernoulli(0.49);
  // mpmath, 20 digits: log(51/49)
  CHECK(std::abs(renyi_divergence(p, q, Order::infinity()).value() -
                 0.040005334613699161434) < 1e-14);
}

TEST_CASE("identical distributions have zero divergence at every order") {
  const DiscreteDistribution p({0.2, 0.3, 0.5});
  for (const double a : {1.0, 1.5, 2.0, 16.0}) {
    CHECK(renyi_divergence(p, p, Order::from_value(a)).value() == 0.0);
  }
  CHECK(renyi_divergence(p, p, Order::infinity()).value() == 0.0);
}

TEST_CASE("mass outside supp(q) gives infinite divergence") {
  const DiscreteDistribution p({0.5, 0.5});
  const DiscreteDistribution q({1.0, 0.0});
  CHECK(renyi_divergence(p, q, Order::one()).is_infinite());
  CHECK(renyi_divergence(p, q, Order::finite(2.0)).is_infinite());
  CHECK(renyi_divergence(p, q, Order::infinity()).is_infinite());
}

TEST_CASE("zero-mass outcomes do not contribute") {
  const DiscreteDistribution p({0.51, 0.49, 0.0});
  const DiscreteDistribution q({0.49, 0.51, 0.0});
  const auto p2 = DiscreteDistribution::bernoulli(0.51);
  const auto q2 = DiscreteDistribution::bernoulli(0.49);
  for (const double a : {1.0, 2.0, 8.0}) {
    CHECK(std::abs(
              renyi_divergence(p, q, Order::from_value(a)).value() -
              renyi_divergence(p2, q2, Order::from_value(a)).value()) < 1e-14);
  }
}

TEST_CASE("continuity at the order limits") {
  const auto p = DiscreteDistribution::bernoulli(0.6);
  const auto q = DiscreteDistribution::bernoulli(0.4);
  const double at_one = renyi_divergence(p, q, Order::one()).value();
  const double near_one =
      renyi_divergence(p, q, Order::finite(1.0 + 1e-7)).value();
  CHECK(std::abs(near_one - at_one) < 1e-6);

  const double at_inf = renyi_divergence(p, q, Order::infinity()).value();
  const double near_inf =
      renyi_divergence(p, q, Order::finite(1e7)).value();
  CHECK(std::abs(near_inf - at_inf) < 1e-6);
}

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(DiscreteDistribution({}), rdp::InputError);
  CHECK_THROWS_AS(DiscreteDistribution({0.5, 0.4}), rdp::InputError);
  CHECK_THROWS_AS(DiscreteDistribution({1.2, -0.2}), rdp::InputError);
  CHECK_THROWS_AS(DiscreteDistribution({1.0}, {"a", "b"}), rdp::InputError);
  CHECK_THROWS_AS(renyi_divergence(DiscreteDistribution({1.0}),
                                   DiscreteDistribution({0.5, 0.5}),
                                   Order::finite(2.0)),
                  rdp::InputError);
}

TEST_CASE("quadrature matches the laplace closed forms") {
  for (const double lambda : {1.0, 20.0}) {
    const QuadratureSettings settings{-45.0 * lambda - 45.0,
                                      45.0 * lambda + 46.0, 4000, 1e-11};
    const auto log_p = laplace_log_density(0.0, lambda);
    const auto log_q = laplace_log_density(1.0, lambda);
    for (const double a : {1.0, 1.5, 2.0, 32.0}) {
      const double numeric =
          renyi_divergence_quadrature(log_p, log_q, Order::from_value(a),
                                      settings)
              .value();
      const double closed =
          rdp::rdp_epsilon(rdp::Laplace{lambda}, Order::from_value(a)).value();
      CHECK(std::abs(numeric - closed) < 1e-9);
    }
  }
}

TEST_CASE("quadrature matches the gaussian closed form") {
  for (const double sigma : {1.0, 10.0}) {
    const auto log_p = gaussian_log_density(0.0, sigma);
    const auto log_q = gaussian_log_density(1.0, sigma);
    for (const double a : {1.0, 2.0, 8.0, 32.0}) {
      const QuadratureSettings settings{(1.0 - a) - 45.0 * sigma - 1.0,
                                        45.0 * sigma + 2.0, 4000, 1e-11};
      const double numeric =
          renyi_divergence_quadrature(log_p, log_q, Order::from_value(a),
                                      settings)
              .value();
      const double closed = a / (2.0 * sigma * sigma);
      CHECK(std::abs(numeric - closed) < 1e-9);
    }
  }
}

TEST_CASE("quadrature settings are validated") {
  const auto log_p = gaussian_log_density(0.0, 1.0);
  CHECK_THROWS_AS(renyi_divergence_quadrature(
                      log_p, log_p, Order::finite(2.0),
                      QuadratureSettings{1.0, -1.0, 2000, 1e-10}),
                  rdp::InputError);
  CHECK_THROWS_AS(renyi_divergence_quadrature(
                      log_p, log_p, Order::finite(2.0),
                      QuadratureSettings{-1.0, 1.0, 0, 1e-10}),
                  rdp::InputError);
}

}  // TEST_SUITE

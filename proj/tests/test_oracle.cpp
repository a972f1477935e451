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
#include <vector>

#include "doctest.h"
#include "rdp/divergence.hpp"
#include "rdp/errors.hpp"
#include "rdp/oracle.hpp"

namespace {

using rdp::DiscreteDistribution;
using rdp::Order;

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("product composition multiplies outcome masses") {
  const std::vector<DiscreteDistribution> ps(
      3, DiscreteDistribution::bernoulli(0.52));
  const std::vector<DiscreteDistribution> qs(
      3, DiscreteDistribution::bernoulli(0.48));
  const auto [p, q] = rdp::oracle::product_compose(ps, qs);
  REQUIRE(p.size() == 8);
  CHECK(p.mass(0) == doctest::Approx(0.52 * 0.52 * 0.52).epsilon(1e-15));
  CHECK(q.mass(7) == doctest::Approx(0.52 * 0.52 * 0.52).epsilon(1e-15));
}

TEST_CASE("divergence of a product is the sum of the divergences") {
  const auto p1 = DiscreteDistribution::bernoulli(0.52);
  const auto q1 = DiscreteDistribution::bernoulli(0.48);
  for (const double a : {1.0, 2.0, 8.0}) {
    const Order order = Order::from_value(a);
    const double single = rdp::renyi_divergence(p1, q1, order).value();
    for (int n = 2; n <= 6; ++n) {
      const std::vector<DiscreteDistribution> ps(n, p1), qs(n, q1);
      const auto [p, q] = rdp::oracle::product_compose(ps, qs);
      CHECK(std::abs(rdp::renyi_divergence(p, q, order).value() -
                     n * single) < 1e-12);
    }
  }
}

TEST_CASE("product composition resource limits") {
  const std::vector<DiscreteDistribution> ps(
      21, DiscreteDistribution::bernoulli(0.5));
  CHECK_THROWS_AS(rdp::oracle::product_compose(ps, ps), rdp::ResourceError);
  CHECK_THROWS_AS(rdp::oracle::product_compose({}, {}), rdp::InputError);
}

TEST_CASE("preservation check holds on bernoulli pairs") {
  const auto report = rdp::oracle::exhaustive_preservation_check(
      DiscreteDistribution::bernoulli(0.7),
      DiscreteDistribution::bernoulli(0.4), Order::finite(2.0));
  CHECK(report.holds);
  CHECK(report.min_slack >= 0.0);
  // the witness subset attains the tightest bound; spot-check it
  const double divergence =
      rdp::renyi_divergence(DiscreteDistribution::bernoulli(0.7),
                            DiscreteDistribution::bernoulli(0.4),
                            Order::finite(2.0))
          .value();
  CHECK(report.witness_bound <=
        std::pow(std::exp(divergence) * 1.0, 0.5) + 1e-12);
}

TEST_CASE("preservation check input limits") {
  const auto p = DiscreteDistribution::bernoulli(0.5);
  CHECK_THROWS_AS(
      rdp::oracle::exhaustive_preservation_check(p, p, Order::infinity()),
      rdp::InputError);
  const std::vector<double> big(16, 1.0 / 16.0);
  CHECK_THROWS_AS(rdp::oracle::exhaustive_preservation_check(
                      DiscreteDistribution(big), DiscreteDistribution(big),
                      Order::finite(2.0)),
                  rdp::ResourceError);
}

TEST_CASE("grid optimizer finds the minimum of a convex objective") {
  const auto [x, v] = rdp::oracle::grid_optimize(
      [](double a) { return (a - 5.0) * (a - 5.0); }, 1.0 + 1e-9, 100.0,
      100000);
  CHECK(std::abs(x - 5.0) < 1e-3);
  CHECK(v < 1e-6);
  CHECK_THROWS_AS(
      rdp::oracle::grid_optimize([](double) { return 0.0; }, 0.5, 2.0, 10),
      rdp::InputError);
  CHECK_THROWS_AS(rdp::oracle::grid_optimize(
                      [](double) { return std::nan(""); }, 2.0, 3.0, 10),
                  rdp::InputError);
}

TEST_CASE("grid optimizer breaks ties toward the smaller argument") {
  const auto [x, v] =
      rdp::oracle::grid_optimize([](double) { return 1.0; }, 2.0, 3.0, 10);
  CHECK(x == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(v == 1.0);
}

}  // TEST_SUITE

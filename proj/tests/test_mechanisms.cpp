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
#include <limits>

#include "doctest.h"
#include "rdp/errors.hpp"
#include "rdp/mechanisms.hpp"

namespace {

using rdp::Gaussian;
using rdp::Laplace;
using rdp::MechanismSpec;
using rdp::Order;
using rdp::PureDp;
using rdp::RandomizedResponse;
using rdp::rdp_epsilon;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

TEST_SUITE("mechanisms") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(rdp::validate(RandomizedResponse{0.0}), rdp::InputError);
  CHECK_THROWS_AS(rdp::validate(RandomizedResponse{1.0}), rdp::InputError);
  CHECK_THROWS_AS(rdp::validate(RandomizedResponse{kNan}), rdp::InputError);
  CHECK_THROWS_AS(rdp::validate(Laplace{0.0}), rdp::InputError);
  CHECK_THROWS_AS(rdp::validate(Laplace{-1.0}), rdp::InputError);
  CHECK_THROWS_AS(rdp::validate(Gaussian{0.0}), rdp::InputError);
  CHECK_THROWS_AS(rdp::validate(PureDp{-0.1}), rdp::InputError);
  CHECK_NOTHROW(rdp::validate(PureDp{0.0}));
  CHECK_NOTHROW(rdp::validate(RandomizedResponse{0.51}));
}

TEST_CASE("randomized response closed forms") {
  // mpmath, 20 digits: log(.52^2/.48 + .48^2/.52)
  CHECK(std::abs(
            rdp_epsilon(RandomizedResponse{0.52}, Order::finite(2.0)).value() -
            0.0063897980987710111412) < 1e-14);
  const double p = 0.51;
  CHECK(std::abs(rdp_epsilon(RandomizedResponse{p}, Order::one()).value() -
                 (2.0 * p - 1.0) * std::log(p / (1.0 - p))) < 1e-14);
  // mpmath, 20 digits: log(51/49)
  CHECK(std::abs(rdp_epsilon(RandomizedResponse{p}, Order::infinity()).value() -
                 0.040005334613699161434) < 1e-14);
  // symmetric in p <-> 1-p
  CHECK(std::abs(
            rdp_epsilon(RandomizedResponse{0.3}, Order::finite(3.0)).value() -
            rdp_epsilon(RandomizedResponse{0.7}, Order::finite(3.0)).value()) <
        1e-14);
}

TEST_CASE("laplace closed forms") {
  // mpmath, 20 digits: log((2/3)e^{1/20} + (1/3)e^{-2/20})
  CHECK(std::abs(rdp_epsilon(Laplace{20.0}, Order::finite(2.0)).value() -
                 0.0024568497342060002884) < 1e-14);
  // mpmath, 20 digits: 1/20 + e^{-1/20} - 1
  CHECK(std::abs(rdp_epsilon(Laplace{20.0}, Order::one()).value() -
                 0.0012294245007140090914) < 1e-14);
  CHECK(rdp_epsilon(Laplace{20.0}, Order::infinity()).value() == 0.05);
}

TEST_CASE("gaussian closed forms") {
  CHECK(std::abs(rdp_epsilon(Gaussian{10.0}, Order::finite(2.0)).value() -
                 0.01) < 1e-16);
  CHECK(std::abs(rdp_epsilon(Gaussian{1.0}, Order::one()).value() - 0.5) <
        1e-16);
  CHECK(rdp_epsilon(Gaussian{1.0}, Order::infinity()).is_infinite());
}

TEST_CASE("pure dp budget curve") {
  const double eps = 0.3;
  for (const double a : {1.5, 2.0, 8.0, 64.0}) {
    const double expected = std::min(eps, 2.0 * a * eps * eps);
    CHECK(std::abs(rdp_epsilon(PureDp{eps}, Order::finite(a)).value() -
                   expected) < 1e-15);
  }
  CHECK(rdp_epsilon(PureDp{eps}, Order::infinity()).value() == eps);
  CHECK(rdp_epsilon(PureDp{0.0}, Order::finite(8.0)).value() == 0.0);
}

TEST_CASE("budget curves are nondecreasing in the order") {
  const MechanismSpec specs[] = {RandomizedResponse{0.6}, Laplace{2.0},
                                 Gaussian{1.5}, PureDp{0.4}};
  const double alphas[] = {1.0, 1.5, 2.0, 3.0, 8.0, 32.0, 256.0};
  for (const MechanismSpec& spec : specs) {
    double prev = 0.0;
    for (const double a : alphas) {
      const double eps = rdp_epsilon(spec, Order::from_value(a)).value();
      CHECK(eps >= prev - 1e-12);
      prev = eps;
    }
    CHECK(rdp_epsilon(spec, Order::infinity()).value() >= prev - 1e-12);
  }
}

TEST_CASE("pure dp epsilon of each mechanism") {
  CHECK(std::abs(rdp::pure_dp_epsilon(RandomizedResponse{0.51}).value() -
                 std::log(0.51 / 0.49)) < 1e-15);
  CHECK(rdp::pure_dp_epsilon(Laplace{20.0}).value() == 0.05);
  CHECK(rdp::pure_dp_epsilon(Gaussian{1.0}).is_infinite());
  CHECK(rdp::pure_dp_epsilon(PureDp{0.7}).value() == 0.7);
}

TEST_CASE("small-epsilon quadratic bound for randomized response") {
  // eps = log(p/(1-p)) in (0, 1] for p up to ~0.73
  for (const double p : {0.51, 0.55, 0.6, 0.65, 0.7}) {
    const double eps = std::log(p / (1.0 - p));
    REQUIRE(eps <= 1.0);
    for (const double a : {1.5, 2.0, 4.0, 16.0, 64.0}) {
      CHECK(rdp_epsilon(RandomizedResponse{p}, Order::finite(a)).value() <=
            2.0 * a * eps * eps + 1e-12);
    }
  }
}

}  // TEST_SUITE

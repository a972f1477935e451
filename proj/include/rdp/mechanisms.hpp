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

#ifndef RDP_MECHANISMS_HPP
#define RDP_MECHANISMS_HPP

#include <variant>

#include "rdp/extended_real.hpp"
#include "rdp/order.hpp"

namespace rdp {

// Parameters are normalized to sensitivity 1: callers with l1-sensitivity d1
// rescale lambda -> lambda/d1, callers with l2-sensitivity d2 rescale
// sigma -> sigma/d2 before constructing the spec.

struct RandomizedResponse {
  double p;  // response kept truthfully with probability p, 0 < p < 1
  bool operator==(const RandomizedResponse&) const = default;
};

struct Laplace {
  double lambda;  // noise scale, > 0
  bool operator==(const Laplace&) const = default;
};

struct Gaussian {
  double sigma;  // noise standard deviation, > 0
  bool operator==(const Gaussian&) const = default;
};

struct PureDp {
  double eps;  // classical epsilon guarantee, >= 0
  bool operator==(const PureDp&) const = default;
};

using MechanismSpec =
    std::variant<RandomizedResponse, Laplace, Gaussian, PureDp>;

/// Throws InputError unless the spec parameters are in range.
void validate(const MechanismSpec& m);

/// The closed-form RDP budget epsilon(alpha) of one mechanism.
ExtendedReal rdp_epsilon(const MechanismSpec& m, Order a);

/// The classical pure-DP epsilon of one mechanism (+inf for Gaussian).
ExtendedReal pure_dp_epsilon(const MechanismSpec& m);

}  // namespace rdp

#endif  // RDP_MECHANISMS_HPP

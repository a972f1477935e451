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

#ifndef RDP_ORACLE_HPP
#define RDP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>

#include "rdp/distribution.hpp"
#include "rdp/order.hpp"

// Independent brute-force verification engines. Deliberately implemented
// with different algorithms than the main computation path (enumeration and
// direct products rather than closed forms) so agreement is evidence, not
// tautology.

namespace rdp::oracle {

/// Independent joint distributions over the product outcome space of the
/// given per-step pairs. Suitable for exact divergence evaluation; the total
/// joint support is limited to 1e6 outcomes.
std::pair<DiscreteDistribution, DiscreteDistribution> product_compose(
    std::span<const DiscreteDistribution> ps,
    std::span<const DiscreteDistribution> qs);

/// Outcome of checking P(A) <= (exp[D_alpha] Q(A))^((alpha-1)/alpha) over
/// every event A. `witness_subset` is the bitmask of the event realizing the
/// minimal slack (or the first violating event when holds is false).
struct PreservationReport {
  bool holds;
  double min_slack;
  std::uint32_t witness_subset;
  double witness_probability;  // P(A) at the witness
  double witness_bound;        // bound value at the witness
};

/// Exhaustively verifies probability preservation over all 2^k events.
/// Requires finite order and support size <= 12.
PreservationReport exhaustive_preservation_check(const DiscreteDistribution& p,
                                                 const DiscreteDistribution& q,
                                                 Order a);

/// Deterministic dense-grid minimizer over a logarithmically spaced grid on
/// [lo, hi]; ties break toward the smaller point. Returns (argmin, value).
/// Throws InputError if the objective produces NaN.
std::pair<double, double> grid_optimize(
    const std::function<double(double)>& objective, double lo, double hi,
    int points);

}  // namespace rdp::oracle

#endif  // RDP_ORACLE_HPP

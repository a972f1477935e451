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

#include "rdp/distribution.hpp"

#include <cmath>
#include <utility>

#include "rdp/errors.hpp"

namespace rdp {

DiscreteDistribution::DiscreteDistribution(std::vector<double> masses,
                                           std::vector<std::string> labels)
    : masses_(std::move(masses)), labels_(std::move(labels)) {
  if (masses_.empty()) {
    throw InputError("distribution must have at least one outcome");
  }
  if (!labels_.empty() && labels_.size() != masses_.size()) {
    throw InputError("label count does not match outcome count");
  }
  double sum = 0.0;
  bool has_support = false;
  for (double m : masses_) {
    if (!(m >= 0.0) || m > 1.0 + 1e-12) {
      throw InputError("each mass must lie in [0, 1]");
    }
    if (m > 0.0) has_support = true;
    sum += m;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw InputError("masses must sum to 1 within 1e-12");
  }
  if (!has_support) {
    throw InputError("support must be nonempty");
  }
}

DiscreteDistribution DiscreteDistribution::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("bernoulli parameter must lie in [0, 1]");
  }
  return DiscreteDistribution({p, 1.0 - p});
}

}  // namespace rdp

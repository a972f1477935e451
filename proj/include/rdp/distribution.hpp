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

#ifndef RDP_DISTRIBUTION_HPP
#define RDP_DISTRIBUTION_HPP

#include <span>
#include <string>
#include <vector>

namespace rdp {

/// Finite probability vector over an ordered outcome index set.
///
/// Invariants enforced at construction: every mass is in [0, 1], masses sum
/// to 1 within 1e-12 absolute, and the support is nonempty.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> masses,
                                std::vector<std::string> labels = {});

  /// Two-outcome distribution {p, 1-p}.
  static DiscreteDistribution bernoulli(double p);

  std::size_t size() const noexcept { return masses_.size(); }
  double mass(std::size_t i) const { return masses_.at(i); }
  std::span<const double> masses() const noexcept { return masses_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<double> masses_;
  std::vector<std::string> labels_;
};

}  // namespace rdp

#endif  // RDP_DISTRIBUTION_HPP

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

#include "rdp/oracle.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "rdp/divergence.hpp"
#include "rdp/errors.hpp"

namespace rdp::oracle {
namespace {

constexpr std::size_t kMaxJointSupport = 1000000;

}  // namespace

std::pair<DiscreteDistribution, DiscreteDistribution> product_compose(
    std::span<const DiscreteDistribution> ps,
    std::span<const DiscreteDistribution> qs) {
  if (ps.size() != qs.size() || ps.empty()) {
    throw InputError("product_compose requires equal-length nonempty lists");
  }
  std::size_t joint = 1;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].size() != qs[i].size()) {
      throw InputError("each pair must share an outcome index set");
    }
    if (joint > kMaxJointSupport / ps[i].size()) {
      throw ResourceError("joint support exceeds 1e6 outcomes");
    }
    joint *= ps[i].size();
  }

  std::vector<double> p_joint{1.0}, q_joint{1.0};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<double> p_next, q_next;
    p_next.reserve(p_joint.size() * ps[i].size());
    q_next.reserve(q_joint.size() * qs[i].size());
    for (std::size_t j = 0; j < p_joint.size(); ++j) {
      for (std::size_t k = 0; k < ps[i].size(); ++k) {
        p_next.push_back(p_joint[j] * ps[i].mass(k));
        q_next.push_back(q_joint[j] * qs[i].mass(k));
      }
    }
    p_joint = std::move(p_next);
    q_joint = std::move(q_next);
  }
  return {DiscreteDistribution(std::move(p_joint)),
          DiscreteDistribution(std::move(q_joint))};
}

PreservationReport exhaustive_preservation_check(const DiscreteDistribution& p,
                                                 const DiscreteDistribution& q,
                                                 Order a) {
  if (!a.is_finite()) {
    throw InputError("preservation check requires a finite order");
  }
  if (p.size() != q.size()) {
    throw InputError("distributions must share an outcome index set");
  }
  if (p.size() > 12) {
    throw ResourceError("exhaustive check is limited to support size 12");
  }
  const double divergence = renyi_divergence(p, q, a).value();
  const double alpha = a.value();
  const double exponent = (alpha - 1.0) / alpha;

  PreservationReport report{true, std::numeric_limits<double>::infinity(), 0,
                            0.0, 0.0};
  const std::uint32_t subsets = 1u << p.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    double pa = 0.0, qa = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (mask & (1u << i)) {
        pa += p.mass(i);
        qa += q.mass(i);
      }
    }
    const double bound =
        std::isinf(divergence)
            ? std::numeric_limits<double>::infinity()
            : std::pow(std::exp(divergence) * qa, exponent);
    const double slack = bound - pa;
    if (slack < -1e-12) {
      return PreservationReport{false, slack, mask, pa, bound};
    }
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.witness_subset = mask;
      report.witness_probability = pa;
      report.witness_bound = bound;
    }
  }
  return report;
}

std::pair<double, double> grid_optimize(
    const std::function<double(double)>& objective, double lo, double hi,
    int points) {
  if (!(lo > 1.0) || !(hi > lo) || points < 2) {
    throw InputError("grid_optimize requires 1 < lo < hi and points >= 2");
  }
  const double t_lo = std::log(lo), t_hi = std::log(hi);
  double best_x = lo, best_v = std::numeric_limits<double>::infinity();
  bool first = true;
  for (int i = 0; i < points; ++i) {
    const double x = std::exp(t_lo + (t_hi - t_lo) * i / (points - 1));
    const double v = objective(x);
    if (std::isnan(v)) throw InputError("objective produced NaN");
    if (first || v < best_v) {
      best_x = x;
      best_v = v;
      first = false;
    }
  }
  return {best_x, best_v};
}

}  // namespace rdp::oracle

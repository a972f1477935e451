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

#include "rdp/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rdp/errors.hpp"

namespace rdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOneBranchWidth = 1e-9;

double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

double rr_epsilon(double p, Order a) {
  const double log_ratio = std::log(p / (1.0 - p));
  if (a.is_infinity()) return std::fabs(log_ratio);
  const double alpha = a.value();
  if (a.is_one() || alpha < 1.0 + kOneBranchWidth) {
    return (2.0 * p - 1.0) * log_ratio;
  }
  const double lp = std::log(p), l1p = std::log1p(-p);
  return detail::clamp_nonnegative(
      log_add_exp(alpha * lp + (1.0 - alpha) * l1p,
                  alpha * l1p + (1.0 - alpha) * lp) /
      (alpha - 1.0));
}

double laplace_epsilon(double lambda, Order a) {
  if (a.is_infinity()) return 1.0 / lambda;
  const double alpha = a.value();
  if (a.is_one() || alpha < 1.0 + kOneBranchWidth) {
    return 1.0 / lambda + std::expm1(-1.0 / lambda);
  }
  // exp((alpha-1)/lambda) overflows for large alpha and small lambda, so the
  // two terms are combined in log space.
  return detail::clamp_nonnegative(
      log_add_exp(std::log(alpha / (2.0 * alpha - 1.0)) + (alpha - 1.0) / lambda,
                  std::log((alpha - 1.0) / (2.0 * alpha - 1.0)) - alpha / lambda) /
      (alpha - 1.0));
}

double pure_dp_curve(double eps, Order a) {
  if (a.is_infinity()) return eps;
  // The 2 alpha eps^2 branch holds for all alpha >= 1; the eps cap follows
  // from monotonicity against the max divergence.
  return std::min(eps, 2.0 * a.value() * eps * eps);
}

}  // namespace

void validate(const MechanismSpec& m) {
  if (const auto* rr = std::get_if<RandomizedResponse>(&m)) {
    if (!(rr->p > 0.0 && rr->p < 1.0)) {
      throw InputError("randomized response requires 0 < p < 1");
    }
  } else if (const auto* lap = std::get_if<Laplace>(&m)) {
    if (!(lap->lambda > 0.0) || !std::isfinite(lap->lambda)) {
      throw InputError("laplace requires lambda > 0");
    }
  } else if (const auto* g = std::get_if<Gaussian>(&m)) {
    if (!(g->sigma > 0.0) || !std::isfinite(g->sigma)) {
      throw InputError("gaussian requires sigma > 0");
    }
  } else if (const auto* pd = std::get_if<PureDp>(&m)) {
    if (!(pd->eps >= 0.0) || !std::isfinite(pd->eps)) {
      throw InputError("pure_dp requires eps >= 0");
    }
  }
}

ExtendedReal rdp_epsilon(const MechanismSpec& m, Order a) {
  validate(m);
  if (const auto* rr = std::get_if<RandomizedResponse>(&m)) {
    return rr_epsilon(rr->p, a);
  }
  if (const auto* lap = std::get_if<Laplace>(&m)) {
    return laplace_epsilon(lap->lambda, a);
  }
  if (const auto* g = std::get_if<Gaussian>(&m)) {
    if (a.is_infinity()) return ExtendedReal::infinity();
    return a.value() / (2.0 * g->sigma * g->sigma);
  }
  return pure_dp_curve(std::get<PureDp>(m).eps, a);
}

ExtendedReal pure_dp_epsilon(const MechanismSpec& m) {
  validate(m);
  if (const auto* rr = std::get_if<RandomizedResponse>(&m)) {
    return std::fabs(std::log(rr->p / (1.0 - rr->p)));
  }
  if (const auto* lap = std::get_if<Laplace>(&m)) {
    return 1.0 / lap->lambda;
  }
  if (std::holds_alternative<Gaussian>(m)) {
    return ExtendedReal::infinity();
  }
  return std::get<PureDp>(m).eps;
}

}  // namespace rdp

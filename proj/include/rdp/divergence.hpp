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

#ifndef RDP_DIVERGENCE_HPP
#define RDP_DIVERGENCE_HPP

#include <functional>

#include "rdp/distribution.hpp"
#include "rdp/extended_real.hpp"
#include "rdp/order.hpp"

namespace rdp {

/// Scalar log-density on the real line.
using LogDensity = std::function<double(double)>;

/// Controls for the one-dimensional quadrature route. The interval must be
/// chosen by the caller so that the mass outside it is negligible at the
/// requested tolerance.
struct QuadratureSettings {
  double lower;
  double upper;
  int max_subdivisions = 2000;
  double abs_tolerance = 1e-10;
};

/// Renyi divergence D_alpha(P||Q) on finite distributions over the same
/// outcome index set.
///
/// alpha = 1 is the Kullback-Leibler divergence, alpha = infinity the max
/// divergence. Finite orders are evaluated in log space (log-sum-exp).
/// Returns +inf exactly when P puts mass outside the support of Q.
/// Throws InputError if the index sets differ structurally.
ExtendedReal renyi_divergence(const DiscreteDistribution& p,
                              const DiscreteDistribution& q, Order a);

/// Renyi divergence between two 1-D densities given in log form, by adaptive
/// Gauss-Kronrod quadrature over the declared interval.
///
/// The estimated error on the returned divergence is at most
/// settings.abs_tolerance; if that cannot be reached within the subdivision
/// budget a NumericalError carrying the best estimate is thrown.
ExtendedReal renyi_divergence_quadrature(const LogDensity& log_p,
                                         const LogDensity& log_q, Order a,
                                         const QuadratureSettings& settings);

}  // namespace rdp

#endif  // RDP_DIVERGENCE_HPP

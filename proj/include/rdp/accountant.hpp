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

#ifndef RDP_ACCOUNTANT_HPP
#define RDP_ACCOUNTANT_HPP

#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "rdp/extended_real.hpp"
#include "rdp/mechanisms.hpp"
#include "rdp/order.hpp"

namespace rdp {

/// Strictly increasing set of divergence orders; may end with Infinity.
/// Orders equal to 1 are not allowed (the conversion formulas divide by
/// alpha - 1).
class OrdersGrid {
 public:
  explicit OrdersGrid(std::vector<Order> orders);

  /// The 13-point grid {1.5, 1.75, 2, 2.5, 3, 4, 5, 6, 8, 16, 32, 64, inf}.
  static const OrdersGrid& default_grid();

  std::span<const Order> orders() const noexcept { return orders_; }

 private:
  std::vector<Order> orders_;
};

/// An RDP budget curve alpha -> epsilon(alpha), stored symbolically as a
/// multiset of mechanism components so evaluation at any order is exact.
/// Immutable after construction; the per-order cache is a pure memo and the
/// curve is safe to evaluate concurrently.
class RdpCurve {
 public:
  struct Component {
    MechanismSpec mechanism;
    long count = 1;
  };

  RdpCurve() = default;  // the identically-zero curve
  explicit RdpCurve(std::vector<Component> components);

  RdpCurve(const RdpCurve& other);
  RdpCurve& operator=(const RdpCurve& other);

  /// Sum of count_i * rdp_epsilon(mechanism_i, a); nondecreasing in a.
  ExtendedReal evaluate(Order a) const;

  const std::vector<Component>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<Component> components_;
  mutable std::mutex mutex_;
  mutable std::map<double, double> cache_;  // keyed by order value
};

/// An (eps, delta) guarantee together with the order it was derived at.
/// alpha is Infinity when the guarantee is not indexed by an order.
struct EpsDelta {
  double eps;
  double delta;
  Order alpha = Order::infinity();
};

/// Two-sided bound on the probability of an event under the adjacent input,
/// with the optimizing order recorded for each side. `vacuous_upper` marks an
/// upper bound that exceeded 1 before clamping.
struct ProbabilityInterval {
  double lower;
  double upper;
  Order alpha_lower = Order::infinity();
  Order alpha_upper = Order::infinity();
  bool vacuous_upper = false;
};

using PrivacyReport = std::variant<EpsDelta, ProbabilityInterval>;

/// Sequential composition: the pointwise sum of the budget curves.
/// Components with identical specs are merged. Throws InputError on an empty
/// list.
RdpCurve compose(std::span<const RdpCurve> curves);

/// Group privacy under a 2^c-stable preprocessing map: maps an (alpha, eps)
/// guarantee to (alpha / 2^c, 3^c eps). Requires finite alpha >= 2^(c+1).
std::pair<Order, ExtendedReal> group_privacy(const RdpCurve& curve, int c,
                                             Order a);

/// Conversion to (eps, delta)-DP at a fixed finite order:
/// eps = epsilon(alpha) + log(1/delta) / (alpha - 1).
EpsDelta to_eps_delta(const RdpCurve& curve, Order a, double delta);

/// Minimizes the conversion over the finite grid orders; when `continuous`
/// is set additionally refines by bracketed scalar search over
/// alpha in (1 + 1e-6, 1e6] and returns the smaller. Ties break toward the
/// smaller alpha.
EpsDelta optimal_eps_for_delta(const RdpCurve& curve, double delta,
                               const OrdersGrid& grid, bool continuous);

/// Single-order probability bounds for a baseline event probability q.
/// Unclamped: the upper bound may exceed 1.
double upper_probability_bound(const RdpCurve& curve, Order a, double q);
double lower_probability_bound(const RdpCurve& curve, Order a, double q);

/// Table-1 upper bound minimized over the grid (optionally refined by
/// continuous search), left unclamped. Returns the optimizing order and the
/// bound; ties break toward the smaller order.
std::pair<Order, double> optimal_upper_probability_bound(const RdpCurve& curve,
                                                         double q,
                                                         const OrdersGrid& grid,
                                                         bool continuous);

/// Two-sided probability interval optimized over the grid (optionally
/// refined by continuous search), clamped to [0, 1].
ProbabilityInterval probability_interval(const RdpCurve& curve, double q,
                                         const OrdersGrid& grid,
                                         bool continuous);

/// Generic advanced-composition bound on Pr[f(D) in S] for an n-fold
/// composition of eps-DP mechanisms with baseline q:
/// min(1, exp(2 eps sqrt(n log(1/q))) * q).
double advanced_composition_bound(double eps, long n, double q);

/// (eps', delta)-DP form of advanced composition with
/// eps' = 4 eps sqrt(2 n log(1/delta)). Requires the high-privacy-regime
/// hypothesis log(1/delta) >= eps^2 n.
EpsDelta advanced_eps_delta(double eps, long n, double delta);

/// Classical advanced-composition epsilon for a k-fold composition of
/// eps-DP mechanisms at failure allowance delta':
/// sqrt(2 k ln(1/delta')) eps + k eps (e^eps - 1).
double drv_eps_delta(double eps, long k, double delta_prime);

/// Probability bound from the classical advanced composition theorem with
/// delta' optimized over a dense logarithmic grid: the smallest value of
/// max(e^{eps'(delta')} q, delta'). Comparison baseline for the generic
/// bound above.
double drv_optimal_probability_bound(double eps, long n, double q);

/// Basic composition: the epsilons add up.
double naive_eps(double eps, long n);

/// Bound on the alpha-th moment of the change in the adversary's
/// posterior-to-prior odds ratio: exp((alpha - 1) epsilon(alpha)).
double bayes_moment_bound(const RdpCurve& curve, Order a);

}  // namespace rdp

#endif  // RDP_ACCOUNTANT_HPP

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

#include "rdp/accountant.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "rdp/errors.hpp"

namespace rdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Continuous refinement searches alpha in (1 + 1e-6, 1e6].
constexpr double kAlphaSearchLo = 1.0 + 1e-6;
constexpr double kAlphaSearchHi = 1e6;
constexpr int kPrescanPoints = 4096;

struct ScalarMin {
  double alpha;
  double value;
};

// Dense logarithmic prescan followed by a golden-section polish between the
// neighbors of the best sample. The objectives here are quasi-convex in
// log(alpha); the prescan is the fallback for any that are not.
ScalarMin minimize_over_alpha(const std::function<double(double)>& objective) {
  const double t_lo = std::log(kAlphaSearchLo);
  const double t_hi = std::log(kAlphaSearchHi);
  auto eval = [&](double t) { return objective(std::exp(t)); };

  int best_i = 0;
  double best_v = kInf;
  for (int i = 0; i <= kPrescanPoints; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / kPrescanPoints;
    const double v = eval(t);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  double lo = t_lo + (t_hi - t_lo) * std::max(0, best_i - 1) / kPrescanPoints;
  double hi =
      t_lo + (t_hi - t_lo) * std::min(kPrescanPoints, best_i + 1) / kPrescanPoints;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = eval(x1), f2 = eval(x2);
  for (int it = 0; it < 150 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = eval(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = eval(x2);
    }
  }
  ScalarMin result{std::exp(0.5 * (lo + hi)), eval(0.5 * (lo + hi))};
  if (best_v < result.value) {
    result = {std::exp(t_lo + (t_hi - t_lo) * best_i / kPrescanPoints), best_v};
  }
  return result;
}

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError(std::string(name) + " must lie in [0, 1]");
  }
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InputError("delta must lie in (0, 1)");
  }
}

}  // namespace

OrdersGrid::OrdersGrid(std::vector<Order> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InputError("orders grid must be nonempty");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i].is_one()) {
      throw InputError("order 1 is not allowed in an optimization grid");
    }
    if (i > 0 && !(orders_[i - 1] < orders_[i])) {
      throw InputError("orders must be strictly increasing");
    }
  }
}

const OrdersGrid& OrdersGrid::default_grid() {
  static const OrdersGrid grid([] {
    std::vector<Order> orders;
    for (double a : {1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 5.0, 6.0, 8.0, 16.0, 32.0,
                     64.0}) {
      orders.push_back(Order::finite(a));
    }
    orders.push_back(Order::infinity());
    return orders;
  }());
  return grid;
}

RdpCurve::RdpCurve(std::vector<Component> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) {
    validate(c.mechanism);
    if (c.count < 1) throw InputError("component count must be positive");
  }
}

RdpCurve::RdpCurve(const RdpCurve& other) : components_(other.components_) {}

RdpCurve& RdpCurve::operator=(const RdpCurve& other) {
  if (this != &other) {
    components_ = other.components_;
    std::lock_guard lock(mutex_);
    cache_.clear();
  }
  return *this;
}

ExtendedReal RdpCurve::evaluate(Order a) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(a.value());
    if (it != cache_.end()) return it->second;
  }
  double total = 0.0;
  for (const auto& c : components_) {
    const ExtendedReal e = rdp_epsilon(c.mechanism, a);
    if (e.is_infinite()) {
      total = kInf;
      break;
    }
    total += static_cast<double>(c.count) * e.value();
  }
  {
    std::lock_guard lock(mutex_);
    cache_.emplace(a.value(), total);
  }
  return total;
}

RdpCurve compose(std::span<const RdpCurve> curves) {
  if (curves.empty()) throw InputError("compose requires at least one curve");
  std::vector<RdpCurve::Component> merged;
  for (const RdpCurve& curve : curves) {
    for (const auto& c : curve.components()) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) {
        return m.mechanism == c.mechanism;
      });
      if (it != merged.end()) {
        it->count += c.count;
      } else {
        merged.push_back(c);
      }
    }
  }
  return RdpCurve(std::move(merged));
}

std::pair<Order, ExtendedReal> group_privacy(const RdpCurve& curve, int c,
                                             Order a) {
  if (c < 0) throw InputError("stability exponent must be nonnegative");
  if (!a.is_finite()) {
    throw PreconditionError("group privacy requires a finite order");
  }
  const double scale = std::ldexp(1.0, c);  // 2^c
  if (!(a.value() >= 2.0 * scale)) {
    throw PreconditionError(
        "group privacy requires alpha >= 2^(c+1); the proposition does not "
        "apply");
  }
  const ExtendedReal eps = curve.evaluate(a);
  const double factor = std::pow(3.0, c);
  const Order reduced = Order::finite(a.value() / scale);
  if (eps.is_infinite()) return {reduced, ExtendedReal::infinity()};
  return {reduced, factor * eps.value()};
}

EpsDelta to_eps_delta(const RdpCurve& curve, Order a, double delta) {
  if (!a.is_finite()) {
    throw PreconditionError(
        "conversion to (eps, delta)-DP requires a finite order > 1");
  }
  check_delta(delta);
  const double eps = curve.evaluate(a).value();
  return EpsDelta{eps + std::log(1.0 / delta) / (a.value() - 1.0), delta, a};
}

EpsDelta optimal_eps_for_delta(const RdpCurve& curve, double delta,
                               const OrdersGrid& grid, bool continuous) {
  check_delta(delta);
  const double log_inv_delta = std::log(1.0 / delta);
  auto objective = [&](double alpha) {
    const double eps = curve.evaluate(Order::finite(alpha)).value();
    return eps + log_inv_delta / (alpha - 1.0);
  };

  bool found = false;
  Order best_alpha = Order::infinity();
  double best = kInf;
  for (const Order& a : grid.orders()) {
    if (!a.is_finite()) continue;
    const double v = objective(a.value());
    if (v < best) {
      best = v;
      best_alpha = a;
      found = true;
    }
  }
  if (!found) {
    throw InputError("grid must contain at least one finite order > 1");
  }
  if (continuous) {
    const ScalarMin refined = minimize_over_alpha(objective);
    if (refined.value < best ||
        (refined.value == best && refined.alpha < best_alpha.value())) {
      best = refined.value;
      best_alpha = Order::finite(refined.alpha);
    }
  }
  return EpsDelta{best, delta, best_alpha};
}

double upper_probability_bound(const RdpCurve& curve, Order a, double q) {
  check_probability(q, "baseline probability");
  if (q == 0.0) return 0.0;
  const ExtendedReal eps = curve.evaluate(a);
  if (eps.is_infinite()) return kInf;
  if (a.is_infinity()) return std::exp(eps.value()) * q;
  if (a.is_one()) return 1.0;  // exponent (alpha-1)/alpha vanishes
  const double alpha = a.value();
  return std::exp((1.0 - 1.0 / alpha) * (eps.value() + std::log(q)));
}

double lower_probability_bound(const RdpCurve& curve, Order a, double q) {
  check_probability(q, "baseline probability");
  if (q == 0.0) return 0.0;
  const ExtendedReal eps = curve.evaluate(a);
  if (eps.is_infinite()) return 0.0;
  if (a.is_infinity()) return std::exp(-eps.value()) * q;
  const double alpha = a.value();
  return std::exp(-eps.value() + alpha / (alpha - 1.0) * std::log(q));
}

std::pair<Order, double> optimal_upper_probability_bound(const RdpCurve& curve,
                                                         double q,
                                                         const OrdersGrid& grid,
                                                         bool continuous) {
  check_probability(q, "baseline probability");
  Order alpha_upper = grid.orders().front();
  if (q == 0.0) return {alpha_upper, 0.0};
  double upper = kInf;
  for (const Order& a : grid.orders()) {
    const double u = upper_probability_bound(curve, a, q);
    if (u < upper) {
      upper = u;
      alpha_upper = a;
    }
  }
  if (continuous) {
    const ScalarMin up = minimize_over_alpha([&](double alpha) {
      return upper_probability_bound(curve, Order::finite(alpha), q);
    });
    if (up.value < upper ||
        (up.value == upper && up.alpha < alpha_upper.value())) {
      upper = up.value;
      alpha_upper = Order::finite(up.alpha);
    }
  }
  return {alpha_upper, upper};
}

ProbabilityInterval probability_interval(const RdpCurve& curve, double q,
                                         const OrdersGrid& grid,
                                         bool continuous) {
  check_probability(q, "baseline probability");
  const Order first = grid.orders().front();
  if (q == 0.0) {
    return ProbabilityInterval{0.0, 0.0, first, first, false};
  }

  auto [alpha_upper, upper] =
      optimal_upper_probability_bound(curve, q, grid, continuous);
  Order alpha_lower = first;
  double lower = -kInf;
  for (const Order& a : grid.orders()) {
    const double l = lower_probability_bound(curve, a, q);
    if (l > lower) {
      lower = l;
      alpha_lower = a;
    }
  }
  if (continuous) {
    const ScalarMin lo = minimize_over_alpha([&](double alpha) {
      return -lower_probability_bound(curve, Order::finite(alpha), q);
    });
    if (-lo.value > lower) {
      lower = -lo.value;
      alpha_lower = Order::finite(lo.alpha);
    }
  }
  const bool vacuous = !(upper <= 1.0);
  return ProbabilityInterval{std::clamp(lower, 0.0, 1.0),
                             std::clamp(upper, 0.0, 1.0), alpha_lower,
                             alpha_upper, vacuous};
}

double advanced_composition_bound(double eps, long n, double q) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  if (n < 1) throw InputError("n must be positive");
  check_probability(q, "baseline probability");
  if (q == 0.0) return 0.0;
  return std::min(1.0,
                  std::exp(2.0 * eps * std::sqrt(n * std::log(1.0 / q))) * q);
}

EpsDelta advanced_eps_delta(double eps, long n, double delta) {
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  if (n < 1) throw InputError("n must be positive");
  check_delta(delta);
  const double log_inv_delta = std::log(1.0 / delta);
  if (log_inv_delta < eps * eps * static_cast<double>(n)) {
    throw PreconditionError(
        "advanced_eps_delta requires log(1/delta) >= eps^2 n (the "
        "high-privacy regime)");
  }
  return EpsDelta{4.0 * eps * std::sqrt(2.0 * n * log_inv_delta), delta,
                  Order::infinity()};
}

double drv_eps_delta(double eps, long k, double delta_prime) {
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  if (k < 1) throw InputError("k must be positive");
  check_delta(delta_prime);
  return std::sqrt(2.0 * k * std::log(1.0 / delta_prime)) * eps +
         k * eps * std::expm1(eps);
}

double drv_optimal_probability_bound(double eps, long n, double q) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  if (n < 1) throw InputError("n must be positive");
  check_probability(q, "baseline probability");
  constexpr int kPoints = 20000;
  const double lo = std::log(1e-12), hi = std::log(1.0 - 1e-6);
  double best = kInf;
  for (int i = 0; i <= kPoints; ++i) {
    const double delta_prime = std::exp(lo + (hi - lo) * i / kPoints);
    const double eps_prime = drv_eps_delta(eps, n, delta_prime);
    best = std::min(best, std::max(std::exp(eps_prime) * q, delta_prime));
  }
  return best;
}

double naive_eps(double eps, long n) {
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  if (n < 1) throw InputError("n must be positive");
  return static_cast<double>(n) * eps;
}

double bayes_moment_bound(const RdpCurve& curve, Order a) {
  if (!a.is_finite()) {
    throw PreconditionError("moment bound requires a finite order");
  }
  const ExtendedReal eps = curve.evaluate(a);
  if (eps.is_infinite()) return kInf;
  return std::exp((a.value() - 1.0) * eps.value());
}

}  // namespace rdp

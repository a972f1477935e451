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

#include "rdp/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "rdp/errors.hpp"

namespace rdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Finite alpha this close to 1 is routed to the KL branch; the 1/(alpha-1)
// division is catastrophically ill-conditioned there.
constexpr double kOneBranchWidth = 1e-9;

// Streaming log-sum-exp with a running maximum.
class LogSumExp {
 public:
  void add(double log_term) {
    if (log_term == -kInf) return;
    if (log_term > max_) {
      if (max_ != -kInf) sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      else sum_ = 1.0;
      max_ = log_term;
    } else {
      sum_ += std::exp(log_term - max_);
    }
  }

  bool empty() const { return max_ == -kInf; }
  double result() const { return empty() ? -kInf : max_ + std::log(sum_); }

 private:
  double max_ = -kInf;
  double sum_ = 0.0;
};

double kl_divergence(const DiscreteDistribution& p,
                     const DiscreteDistribution& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.mass(i);
    if (pi == 0.0) continue;  // 0 * log(0/q) = 0
    if (q.mass(i) == 0.0) return kInf;
    sum += pi * std::log(pi / q.mass(i));
  }
  return detail::clamp_nonnegative(sum);
}

double max_divergence(const DiscreteDistribution& p,
                      const DiscreteDistribution& q) {
  double best = -kInf;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.mass(i);
    if (pi > 0.0 && q.mass(i) == 0.0) return kInf;
    if (q.mass(i) == 0.0 || pi == 0.0) continue;
    best = std::max(best, std::log(pi / q.mass(i)));
  }
  return detail::clamp_nonnegative(best);
}

double finite_divergence(const DiscreteDistribution& p,
                         const DiscreteDistribution& q, double alpha) {
  LogSumExp lse;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.mass(i);
    if (pi == 0.0) continue;  // 0^alpha q^(1-alpha) = 0 for alpha > 1
    if (q.mass(i) == 0.0) return kInf;
    lse.add(alpha * std::log(pi) + (1.0 - alpha) * std::log(q.mass(i)));
  }
  return detail::clamp_nonnegative(lse.result() / (alpha - 1.0));
}

// 15-point Kronrod extension of the 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b;
  double integral;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a,
                    double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = kWgk[7] * f(center);
  double gauss = kWg[3] * f(center);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::fabs(kronrod - gauss)};
}

// Globally adaptive integration: repeatedly bisects the panel with the
// largest error estimate. The tolerance is absolute with a relative floor so
// large integrands terminate sensibly.
double adaptive_integrate(const std::function<double(double)>& f, double lower,
                          double upper, int max_subdivisions,
                          double abs_tolerance) {
  std::priority_queue<Panel> panels;
  const int initial = 8;  // split up front; integrands may have narrow modes
  double total = 0.0, total_err = 0.0;
  for (int i = 0; i < initial; ++i) {
    const double a = lower + (upper - lower) * i / initial;
    const double b = lower + (upper - lower) * (i + 1) / initial;
    Panel pan = gauss_kronrod(f, a, b);
    total += pan.integral;
    total_err += pan.error;
    panels.push(pan);
  }
  int used = initial;
  while (total_err > std::max(abs_tolerance, 1e-13 * std::fabs(total)) &&
         used < max_subdivisions) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++used;
  }
  if (total_err > std::max(abs_tolerance, 1e-13 * std::fabs(total))) {
    throw NumericalError("quadrature did not converge within the budget",
                         total, total_err);
  }
  return total;
}

void check_settings(const QuadratureSettings& s) {
  if (!(s.lower < s.upper) || !std::isfinite(s.lower) ||
      !std::isfinite(s.upper)) {
    throw InputError("quadrature interval must be finite with lower < upper");
  }
  if (s.max_subdivisions < 1) {
    throw InputError("max_subdivisions must be at least 1");
  }
  if (!(s.abs_tolerance > 0.0)) {
    throw InputError("abs_tolerance must be positive");
  }
}

double quadrature_finite(const LogDensity& log_p, const LogDensity& log_q,
                         double alpha, const QuadratureSettings& s) {
  auto log_integrand = [&](double x) {
    const double lp = log_p(x);
    if (lp == -kInf) return -kInf;
    return alpha * lp + (1.0 - alpha) * log_q(x);
  };
  // Normalize by the integrand's peak so the sum stays in range even when
  // the alpha-power integral is astronomically large or small.
  double shift = -kInf;
  const int scan = 2048;
  for (int i = 0; i <= scan; ++i) {
    const double x = s.lower + (s.upper - s.lower) * i / scan;
    shift = std::max(shift, log_integrand(x));
  }
  if (shift == -kInf) {
    throw InputError("log-densities vanish on the declared interval");
  }
  auto f = [&](double x) {
    const double v = log_integrand(x);
    return v == -kInf ? 0.0 : std::exp(v - shift);
  };
  // An absolute tolerance t on D_alpha corresponds to a relative tolerance
  // of roughly t * (alpha - 1) on the integral.
  const double integral_tol = 0.5 * s.abs_tolerance * std::fabs(alpha - 1.0);
  double normalized =
      adaptive_integrate(f, s.lower, s.upper, s.max_subdivisions,
                         integral_tol * 1e-3);
  if (!(normalized > 0.0)) {
    throw NumericalError("alpha-power integral evaluated to zero", 0.0,
                         integral_tol);
  }
  return detail::clamp_nonnegative(
      (shift + std::log(normalized)) / (alpha - 1.0));
}

double quadrature_kl(const LogDensity& log_p, const LogDensity& log_q,
                     const QuadratureSettings& s) {
  auto f = [&](double x) {
    const double lp = log_p(x);
    if (lp == -kInf) return 0.0;
    return std::exp(lp) * (lp - log_q(x));
  };
  return detail::clamp_nonnegative(adaptive_integrate(
      f, s.lower, s.upper, s.max_subdivisions, s.abs_tolerance));
}

double quadrature_sup(const LogDensity& log_p, const LogDensity& log_q,
                      const QuadratureSettings& s) {
  // Dense scan for the supremum of the log-ratio, then a golden-section
  // polish around the best sample.
  const int scan = 100000;
  double best = -kInf;
  int best_i = 0;
  auto ratio = [&](double x) {
    const double lq = log_q(x);
    if (lq == -kInf) return -kInf;  // outside supp(q)
    const double lp = log_p(x);
    return lp == -kInf ? -kInf : lp - lq;
  };
  for (int i = 0; i <= scan; ++i) {
    const double x = s.lower + (s.upper - s.lower) * i / scan;
    const double v = ratio(x);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double step = (s.upper - s.lower) / scan;
  double lo = s.lower + step * std::max(0, best_i - 1);
  double hi = s.lower + step * std::min(scan, best_i + 1);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = ratio(x1), f2 = ratio(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::fabs(lo)); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = ratio(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = ratio(x1);
    }
  }
  return detail::clamp_nonnegative(std::max(best, std::max(f1, f2)));
}

}  // namespace

ExtendedReal renyi_divergence(const DiscreteDistribution& p,
                              const DiscreteDistribution& q, Order a) {
  if (p.size() != q.size()) {
    throw InputError("distributions must share an outcome index set");
  }
  if (a.is_one() || (a.is_finite() && a.value() < 1.0 + kOneBranchWidth)) {
    return kl_divergence(p, q);
  }
  if (a.is_infinity()) {
    return max_divergence(p, q);
  }
  return finite_divergence(p, q, a.value());
}

ExtendedReal renyi_divergence_quadrature(const LogDensity& log_p,
                                         const LogDensity& log_q, Order a,
                                         const QuadratureSettings& settings) {
  check_settings(settings);
  if (a.is_one() || (a.is_finite() && a.value() < 1.0 + kOneBranchWidth)) {
    return quadrature_kl(log_p, log_q, settings);
  }
  if (a.is_infinity()) {
    return quadrature_sup(log_p, log_q, settings);
  }
  return quadrature_finite(log_p, log_q, a.value(), settings);
}

}  // namespace rdp

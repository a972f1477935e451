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

#ifndef RDP_ORDER_HPP
#define RDP_ORDER_HPP

#include <cmath>
#include <compare>
#include <limits>

#include "rdp/errors.hpp"

namespace rdp {

/// Divergence order alpha in {1} U (1, inf) U {inf}. The two limit orders are
/// explicit states, not floating-point edge cases.
class Order {
 public:
  static Order one() noexcept { return Order(1.0); }

  static Order infinity() noexcept {
    return Order(std::numeric_limits<double>::infinity());
  }

  static Order finite(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 1.0) {
      throw InputError("finite order must satisfy 1 < alpha < infinity");
    }
    return Order(alpha);
  }

  /// 1, inf, or Order::finite depending on the value.
  static Order from_value(double alpha) {
    if (std::isnan(alpha)) throw InputError("order must not be NaN");
    if (alpha == 1.0) return one();
    if (std::isinf(alpha)) return infinity();
    return finite(alpha);
  }

  bool is_one() const noexcept { return alpha_ == 1.0; }
  bool is_infinity() const noexcept { return std::isinf(alpha_); }
  bool is_finite() const noexcept { return !is_one() && !is_infinity(); }

  /// Numeric value: 1.0 for One, +inf for Infinity.
  double value() const noexcept { return alpha_; }

  friend bool operator==(const Order& a, const Order& b) noexcept {
    return a.alpha_ == b.alpha_;
  }
  friend auto operator<=>(const Order& a, const Order& b) noexcept {
    return a.alpha_ <=> b.alpha_;
  }

 private:
  explicit Order(double alpha) noexcept : alpha_(alpha) {}
  double alpha_;
};

}  // namespace rdp

#endif  // RDP_ORDER_HPP

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

#ifndef RDP_EXTENDED_REAL_HPP
#define RDP_EXTENDED_REAL_HPP

#include <cmath>
#include <compare>
#include <limits>

#include "rdp/errors.hpp"

namespace rdp {

/// Nonnegative real or +inf. Never NaN; +inf is a representable state rather
/// than an overflow artifact.
class ExtendedReal {
 public:
  ExtendedReal(double v) : v_(v) {  // NOLINT: implicit by design of the API
    if (std::isnan(v_)) throw InputError("ExtendedReal must not be NaN");
    if (v_ < 0.0) throw InputError("ExtendedReal must be nonnegative");
  }

  static ExtendedReal infinity() noexcept {
    ExtendedReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  double value() const noexcept { return v_; }
  bool is_infinite() const noexcept { return std::isinf(v_); }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
    return a.v_ == b.v_;
  }
  friend auto operator<=>(const ExtendedReal& a, const ExtendedReal& b) noexcept {
    return a.v_ <=> b.v_;
  }

 private:
  ExtendedReal() noexcept : v_(0.0) {}
  double v_;
};

namespace detail {

/// Rounds sub-epsilon negative results of log-space arithmetic back to the
/// mathematically guaranteed lower bound 0.
inline double clamp_nonnegative(double x) {
  return (x < 0.0 && x > -1e-9) ? 0.0 : x;
}

}  // namespace detail

}  // namespace rdp

#endif  // RDP_EXTENDED_REAL_HPP

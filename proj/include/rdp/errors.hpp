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

#ifndef RDP_ERRORS_HPP
#define RDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rdp {

/// Invalid argument supplied by the caller (bad distribution, parameter out
/// of range, mismatched index sets, malformed input file).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem's hypothesis does not hold for the supplied arguments.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested computation exceeds a declared resource limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed to converge within its budget. Carries the
/// best estimate reached and the associated error bound.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double best_estimate,
                 double error_bound)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_bound_(error_bound) {}

  double best_estimate() const { return best_estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

}  // namespace rdp

#endif  // RDP_ERRORS_HPP

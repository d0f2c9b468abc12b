// Copyright 2026 The Boxwell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boxwell/gamma.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "boxwell/errors.hpp"

namespace boxwell {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

LogGamma log_gamma(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be finite");
  }
  if (is_nonpositive_integer(x)) {
    throw PoleError("log_gamma: pole at non-positive integer");
  }
  int sign = 1;
  const double value = boost::math::lgamma(x, &sign);
  return {value, sign};
}

double reciprocal_gamma(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("reciprocal_gamma: argument must be finite");
  }
  if (is_nonpositive_integer(x)) {
    return 0.0;
  }
  if (x >= 0.5) {
    if (x < 170.0) {
      return 1.0 / boost::math::tgamma(x);
    }
    return std::exp(-boost::math::lgamma(x));
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi; sin_pi is exact at integers,
  // so the zeros of the entire function come out exactly.
  const double s = boost::math::sin_pi(x);
  const double g = 1.0 - x;
  if (g < 170.0) {
    return s * boost::math::tgamma(g) / std::numbers::pi;
  }
  const double log_mag = std::log(std::fabs(s)) + boost::math::lgamma(g) - std::log(std::numbers::pi);
  return std::copysign(std::exp(log_mag), s);
}

}  // namespace boxwell

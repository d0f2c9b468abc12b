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

#include "boxwell/quadrature.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "boxwell/errors.hpp"

namespace boxwell {

namespace {

// int_0^k e^(v^2 - 2kv) dv
double edge_remainder(double k) {
  auto integrand = [k](double v) { return std::exp(v * (v - 2.0 * k)); };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, k, 20, 1e-14,
                                                                       &error);
}

void check_k(double k) {
  if (!std::isfinite(k) || k < 0.0) {
    throw DomainError("erfi_integral: k must be finite and non-negative");
  }
}

}  // namespace

double erfi_integral(double k) {
  check_k(k);
  if (k > 40.0) {
    throw OverflowError("erfi_integral: k > 40 is outside the supported range; use erfi_integral_log");
  }
  if (k == 0.0) {
    return 0.0;
  }
  const double remainder = edge_remainder(k);
  if (k * k + std::log(remainder) >= std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("erfi_integral: value exceeds the double range; use erfi_integral_log");
  }
  return std::exp(k * k) * remainder;
}

double erfi_integral_log(double k) {
  check_k(k);
  if (k == 0.0) {
    throw DomainError("erfi_integral_log: the integral vanishes at k = 0");
  }
  return k * k + std::log(edge_remainder(k));
}

}  // namespace boxwell

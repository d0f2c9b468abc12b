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

#include "boxwell/hermite.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "boxwell/errors.hpp"
#include "boxwell/gamma.hpp"
#include "boxwell/tridiagonal.hpp"

namespace boxwell {

HermiteCoefficients hermite_coefficients(double nu) {
  if (!std::isfinite(nu)) {
    throw DomainError("hermite: degree must be finite");
  }
  constexpr double sqrt_pi = 1.7724538509055160273;
  const double scale = std::exp2(nu) * sqrt_pi;
  return {scale * reciprocal_gamma(0.5 * (1.0 - nu)), -2.0 * scale * reciprocal_gamma(-0.5 * nu)};
}

double hermite_nu(double nu, double z, const SeriesConfig& cfg) {
  if (!std::isfinite(z)) {
    throw DomainError("hermite_nu: z must be finite");
  }
  const HermiteCoefficients c = hermite_coefficients(nu);
  const double t = z * z;
  double value = 0.0;
  if (c.even != 0.0) {
    value += c.even * kummer_1f1(-0.5 * nu, 0.5, t, cfg);
  }
  if (c.odd != 0.0) {
    value += c.odd * z * kummer_1f1(0.5 * (1.0 - nu), 1.5, t, cfg);
  }
  return value;
}

double hermite_asymptotic(double nu, double z) {
  if (!std::isfinite(nu) || !std::isfinite(z) || std::fabs(z) < 3.0) {
    throw DomainError("hermite_asymptotic: requires |z| >= 3");
  }
  const double value = std::pow(2.0 * z, nu);
  if (std::isnan(value)) {
    throw DomainError("hermite_asymptotic: (2z)^nu is not real for negative z and non-integer nu");
  }
  return value;
}

double hermite_largest_zero(int n) {
  if (n < 1) {
    throw DomainError("hermite_largest_zero: n must be at least 1");
  }
  if (n == 1) {
    return 0.0;
  }
  // Recurrence z H_j = H_{j+1}/2 + j H_{j-1} symmetrised: zero diagonal,
  // off-diagonal sqrt(j / 2).
  std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
  std::vector<double> off(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) {
    off[static_cast<std::size_t>(j - 1)] = std::sqrt(0.5 * j);
  }
  return tridiagonal_eigenvalue(diag, off, n - 1);
}

}  // namespace boxwell

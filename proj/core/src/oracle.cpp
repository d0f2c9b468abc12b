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

#include "boxwell/oracle.hpp"

#include <cstddef>

#include "boxwell/errors.hpp"
#include "boxwell/tridiagonal.hpp"

namespace boxwell {

void FdConfig::validate() const {
  if (num_interior_points < 100) {
    throw DomainError("FdConfig: num_interior_points must be at least 100");
  }
}

std::vector<double> fd_energies(const Confinement& box, int n_max, int num_interior_points,
                                bool reversed_grid) {
  if (n_max < 0) {
    throw DomainError("fd_energies: n_max must be non-negative");
  }
  if (num_interior_points < 100 || n_max + 1 > num_interior_points / 10) {
    throw DomainError("fd_energies: need at least 100 interior points and n_max + 1 <= N / 10");
  }
  const double k = box.k();
  const auto n = static_cast<std::size_t>(num_interior_points);
  const double h = 2.0 * k / (num_interior_points + 1.0);
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double step = static_cast<double>(i + 1) * h;
    const double z = reversed_grid ? k - step : -k + step;
    diag[i] = inv_h2 + 0.5 * z * z;
  }
  const std::vector<double> off(n - 1, -0.5 * inv_h2);
  return lowest_eigenvalues(diag, off, n_max + 1);
}

std::vector<double> fd_spectrum(const Confinement& box, int n_max, const FdConfig& cfg) {
  cfg.validate();
  std::vector<double> coarse = fd_energies(box, n_max, cfg.num_interior_points);
  if (!cfg.extrapolate) {
    return coarse;
  }
  const std::vector<double> fine = fd_energies(box, n_max, 2 * cfg.num_interior_points + 1);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    coarse[i] = richardson(coarse[i], fine[i]);
  }
  return coarse;
}

double richardson(double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; }

}  // namespace boxwell

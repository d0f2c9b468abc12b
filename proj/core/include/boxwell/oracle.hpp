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

#pragma once

#include <vector>

#include "boxwell/eigensolve.hpp"

namespace boxwell {

/// Finite-difference discretization of -psi''/2 + z^2 psi/2 = E psi on
/// (-k, k) with psi(+-k) = 0.
struct FdConfig {
  int num_interior_points = 4000;
  /// Combine the grid above with one of half the spacing (2N + 1 interior
  /// points) to cancel the O(h^2) error.
  bool extrapolate = true;

  /// Throws DomainError unless num_interior_points >= 100.
  void validate() const;
};

/// Lowest n_max + 1 eigenvalues of the three-point discretization on
/// `num_interior_points` uniform interior nodes, by Sturm bisection.  With
/// reversed_grid the nodes are ordered from +k down to -k.
std::vector<double> fd_energies(const Confinement& box, int n_max, int num_interior_points,
                                bool reversed_grid = false);

/// Energies (hbar omega units) of levels 0..n_max, Richardson-extrapolated
/// when cfg.extrapolate is set.
std::vector<double> fd_spectrum(const Confinement& box, int n_max, const FdConfig& cfg = {});

/// (4 fine - coarse) / 3 for spacings h and h/2.
double richardson(double coarse, double fine);

}  // namespace boxwell

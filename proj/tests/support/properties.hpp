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

#include <string>

// Property checks shared by the unit suites and the acceptance runner.  Each
// returns the worst observed value of its metric and whether it met the
// stated bound.

namespace boxwell::testing {

struct PropertyReport {
  bool pass = false;
  double worst = 0.0;   // worst metric value over the sample
  double bound = 0.0;   // acceptance bound on that metric
  std::string detail;   // where the worst value occurred
};

/// 1F1(a;b;t) = e^t 1F1(b-a;b;-t), a in [-6, 2], b in {1/2, 3/2}, t in [0, 25].
PropertyReport kummer_transformation(int samples = 200);

/// t y'' + (b - t) y' - a y = 0, central differences h = 1e-4.
PropertyReport kummer_ode_residual(int samples = 20);

/// H'' - 2 z H' + 2 nu H = 0, central differences h = 1e-4.
PropertyReport hermite_ode_residual(int samples = 20);

/// H_nu(0) and H_nu'(0) against the closed Gamma-ratio forms.
PropertyReport hermite_boundary_values();

/// Integer degree against H_{n+1} = 2 z H_n - 2 n H_{n-1}.
PropertyReport hermite_recurrence();

/// Relative spread of W(psi(z), psi(-z)) over z in (0, 2].
PropertyReport wronskian_constancy();

/// shift(0) < shift(1) < shift(2) < shift(3) at k = 3, 5, 6.
PropertyReport shift_ordering();

/// shift(n, k) strictly decreasing over k = 2..6 for n = 0, 1, 2.
PropertyReport k_monotonicity();

/// nu_0 < nu_1 < ... across both parities.
PropertyReport interlacing();

/// |psi_n(+-k)| <= 1e-10 max |psi_n|.
PropertyReport boundary_vanishing();

}  // namespace boxwell::testing

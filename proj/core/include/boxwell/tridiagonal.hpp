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

#include <span>
#include <vector>

namespace boxwell {

/// Number of eigenvalues strictly below x of the symmetric tridiagonal
/// matrix with diagonal `diag` and off-diagonal `off` (size n - 1), from the
/// signs of the LDL^T pivots of T - xI (Sturm sequence).
int sturm_count(std::span<const double> diag, std::span<const double> off, double x);

/// index-th smallest eigenvalue (0-based) by Sturm bisection inside the
/// Gershgorin interval, to a bracket width of a few ulp.  Throws
/// SeparationError when the final bracket still holds more than one
/// eigenvalue.
double tridiagonal_eigenvalue(std::span<const double> diag, std::span<const double> off, int index);

/// The `count` smallest eigenvalues in increasing order.
std::vector<double> lowest_eigenvalues(std::span<const double> diag, std::span<const double> off,
                                       int count);

}  // namespace boxwell

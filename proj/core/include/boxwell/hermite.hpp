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

#include "boxwell/kummer.hpp"

namespace boxwell {

/// Coefficients of the two Kummer branches of H_nu:
///   H_nu(z) = even * 1F1(-nu/2; 1/2; z^2) + odd * z * 1F1((1-nu)/2; 3/2; z^2)
/// with even = 2^nu sqrt(pi) / Gamma((1-nu)/2) = H_nu(0) and
///      odd  = 2^nu Gamma(-1/2) / Gamma(-nu/2) = -2^(nu+1) sqrt(pi) / Gamma(-nu/2) = H_nu'(0).
/// At integer nu one of them is exactly zero.
struct HermiteCoefficients {
  double even = 0.0;
  double odd = 0.0;
};

HermiteCoefficients hermite_coefficients(double nu);

/// Hermite function of real degree nu.  Reduces to the physicists' Hermite
/// polynomial at non-negative integer nu.  The two branches cancel for large
/// |z| when nu is not an integer, so accuracy there is limited to roughly
/// e^(z^2) ulp; the solver never relies on that regime.
double hermite_nu(double nu, double z, const SeriesConfig& cfg = {});

/// Leading large-|z| behaviour (2z)^nu.  Only for cross-checks.
/// Throws DomainError for |z| < 3 or when (2z)^nu is not real.
double hermite_asymptotic(double nu, double z);

/// Largest zero of the Hermite polynomial H_n, n >= 1, from the eigenvalues
/// of its Jacobi matrix.
double hermite_largest_zero(int n);

}  // namespace boxwell

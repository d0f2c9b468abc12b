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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "boxwell/eigensolve.hpp"

namespace boxwell {

// Leading-order energy-shift estimates for the boxed oscillator, from the
// wavefunction of the free oscillator near the wall.  All values are in
// units of hbar omega.  The (1 + O(1/k^2)) correction factors of the
// asymptotic forms are not modelled.

enum class BartonMethod { asymptotic, integral };

std::string_view to_string(BartonMethod method);

struct BartonEstimate {
  double value = 0.0;
  BartonMethod method = BartonMethod::asymptotic;
  int n = 0;
  double k = 0.0;
  /// Lower integration limit (z units); set only for the excited-state
  /// integral.
  std::optional<double> a_cutoff;
};

/// E0 (2/sqrt(pi)) (2k) e^{-k^2} with E0 = 1/2.
BartonEstimate barton_ground_asym(const Confinement& box);

/// E0^(n) [2 / ((2n+1) sqrt(pi) n! 2^n)] (2k)^(2n+1) e^{-k^2} with
/// E0^(n) = n + 1/2.  Requires 1 <= n <= 150 (OverflowError above).
BartonEstimate barton_excited_asym(const Level& level, const Confinement& box);

/// Ground or excited form by level.
BartonEstimate barton_asym(const Level& level, const Confinement& box);

/// The excited-state expression evaluated for any n >= 0, in log space.
double barton_leading_term(int n, double k);

/// [sqrt(pi) int_0^k e^{u^2} du]^{-1}: the integral formula with the free
/// ground state.
BartonEstimate barton_ground_integral(const Confinement& box);

/// [int_a^k du / psi_n(u)^2]^{-1} with the normalized free state psi_n.
/// Requires largest zero of H_n < a_cutoff < k (DomainError otherwise);
/// below the last node the integrand is not integrable.
BartonEstimate barton_excited_integral(const Level& level, const Confinement& box, double a_cutoff);

/// Midpoint between the last node of H_n and the wall.  DomainError if the
/// wall is not beyond the last node.
double default_a_cutoff(const Level& level, const Confinement& box);

/// Exact shift over the leading asymptotic estimate.
struct ObliquityRecord {
  int n = 0;
  double k = 0.0;
  double ratio = 0.0;
};

ObliquityRecord obliquity(const Level& level, const Confinement& box, const SeriesConfig& cfg = {});

/// Per-level ratios at one k with their mean and spread.
struct ObliquitySummary {
  double k = 0.0;
  std::vector<ObliquityRecord> levels;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

ObliquitySummary obliquity_summary(const Confinement& box, std::span<const int> levels,
                                   const SeriesConfig& cfg = {});

}  // namespace boxwell

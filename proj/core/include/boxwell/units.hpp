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

#include <cmath>

#include "boxwell/errors.hpp"

namespace boxwell {

/// Units used throughout the library: hbar = m = omega = 1.
///
/// Consequently the oscillator length l = sqrt(hbar / (m omega)) = 1 and
/// alpha = 1 / l^2 = 1.  Positions are z = x sqrt(alpha) = x / l, the
/// Kummer argument is t = z^2, lambda = 2mE / hbar^2 = 2E, and energies
/// are measured in units of hbar omega.  A box of full width L therefore
/// enters every computation only through k = (L / 2) sqrt(alpha) = L / (2 l).
struct DimensionlessFrame {
  static constexpr double hbar = 1.0;
  static constexpr double mass = 1.0;
  static constexpr double omega = 1.0;
  static constexpr double length = 1.0;  // l
  static constexpr double alpha = 1.0;    // 1 / l^2

  /// k = L / (2 l) for a box of full width `box_width` and oscillator length
  /// `oscillator_length`, both in the same physical unit.
  static double confinement_from_width(double box_width, double oscillator_length) {
    if (!(box_width > 0.0) || !(oscillator_length > 0.0) || !std::isfinite(box_width) ||
        !std::isfinite(oscillator_length)) {
      throw DomainError("box width and oscillator length must be positive and finite");
    }
    return box_width / (2.0 * oscillator_length);
  }

  /// Energy in units of hbar omega for effective quantum number nu.
  static constexpr double energy(double nu) { return nu + 0.5; }
};

}  // namespace boxwell

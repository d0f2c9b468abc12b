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
#include <string_view>
#include <vector>

#include "boxwell/kummer.hpp"

namespace boxwell {

enum class Parity { even, odd };

std::string_view to_string(Parity parity);

/// Half-width of the box in oscillator lengths, k = (L/2) sqrt(alpha).
class Confinement {
 public:
  static constexpr double min_supported = 0.2;
  static constexpr double max_supported = 12.0;

  /// Throws DomainError unless k is finite and strictly positive.  Values
  /// outside [min_supported, max_supported] are accepted; callers may warn
  /// via in_supported_range().
  explicit Confinement(double k);

  [[nodiscard]] double k() const { return k_; }
  /// Kummer argument at the wall, t = k^2.
  [[nodiscard]] double t() const { return k_ * k_; }
  [[nodiscard]] bool in_supported_range() const {
    return k_ >= min_supported && k_ <= max_supported;
  }

 private:
  double k_;
};

/// Quantum number n of the confined level.  Even n are even-parity states,
/// odd n odd-parity ones; within a parity class the levels are ordered by
/// the number of nodes.
class Level {
 public:
  explicit Level(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] Parity parity() const { return n_ % 2 == 0 ? Parity::even : Parity::odd; }
  /// Position within its parity class: n = 2 * rank (+ 1 if odd).
  [[nodiscard]] int rank() const { return n_ / 2; }

 private:
  int n_;
};

enum class RootMethod { brent, delta_iteration };

std::string_view to_string(RootMethod method);

/// Real-valued effective quantum number nu of a confined level; the energy
/// is (nu + 1/2) hbar omega.
struct EffectiveIndex {
  int n = 0;
  double nu = 0.0;
  /// nu - n at full relative precision (nu itself cannot hold a 1e-40 offset).
  double delta = 0.0;
  /// Quantization function at the root, and the largest series term there.
  double residual = 0.0;
  double residual_scale = 0.0;
  RootMethod method = RootMethod::brent;
};

struct SpectrumRow {
  double k = 0.0;
  int n = 0;
  Parity parity = Parity::even;
  double nu = 0.0;
  double delta = 0.0;
  double energy_confined = 0.0;  // nu + 1/2
  double energy_free = 0.0;      // n + 1/2
  double shift = 0.0;            // delta
};

/// Even-parity boundary function 1F1(-nu/2; 1/2; k^2); its zeros in nu are
/// the even levels.  Near an even integer (within 1e-3), or whenever the
/// plain series loses more than three digits, it is summed in split form.
double f_even(double nu, const Confinement& box, const SeriesConfig& cfg = {});

/// Odd-parity boundary function 1F1((1-nu)/2; 3/2; k^2).  The nonvanishing
/// prefactor z * 2^nu Gamma(-1/2) / Gamma(-nu/2) of the odd branch is left
/// out, since it only adds spurious zeros at the even integers.
double f_odd(double nu, const Confinement& box, const SeriesConfig& cfg = {});

double quantization_function(Parity parity, double nu, const Confinement& box,
                             const SeriesConfig& cfg = {});

/// First `count` zeros of the parity's boundary function in increasing nu.
///
/// Scans nu upward from 0 in steps of 1/4 for sign changes.  The j-th zero
/// belongs to level 2j (even) or 2j + 1 (odd).  Brackets that start on the
/// level's own integer are probed at delta = 1e-50, 1e-49, ..., 1e-1 to
/// locate the root in delta; below 1e-3 the root is polished by
/// delta_iteration, otherwise by Brent's method.
/// Throws BracketError when the scan budget is exhausted.
std::vector<EffectiveIndex> enumerate_roots(Parity parity, const Confinement& box, int count,
                                            const SeriesConfig& cfg = {});

/// Fixed-point iteration delta <- 2 head / tail on the split root condition
/// head + eps * tail = 0, eps = -delta/2.  Valid only for roots with
/// delta < 1e-3; keeps full relative precision at any delta.
/// Throws ConvergenceError if the iterate leaves that regime, turns
/// non-positive, or fails to settle within 50 steps.
EffectiveIndex delta_iteration(const Level& level, const Confinement& box,
                               const SeriesConfig& cfg = {}, double initial_delta = 0.0);

/// Effective quantum number of one level.
EffectiveIndex level_nu(const Level& level, const Confinement& box, const SeriesConfig& cfg = {});

/// Energy shift nu_n - n in units of hbar omega.
double shift(const Level& level, const Confinement& box, const SeriesConfig& cfg = {});

/// Levels n = 0..n_max.  Failures are rethrown with the level and k named.
std::vector<SpectrumRow> spectrum(const Confinement& box, int n_max, const SeriesConfig& cfg = {});

/// Confined eigenfunction psi_n(z) = u(z) e^{-z^2/2} on [-k, k], with
/// u = 1F1(-nu/2; 1/2; z^2) or z 1F1((1-nu)/2; 3/2; z^2).
class Eigenfunction {
 public:
  Eigenfunction(const EffectiveIndex& index, const Confinement& box, const SeriesConfig& cfg = {});

  /// Unnormalized value; u(0) = 1 for even states.
  [[nodiscard]] double basis(double z) const;
  /// Normalized so that the integral of psi^2 over the box is 1.
  [[nodiscard]] double operator()(double z) const { return norm_ * basis(z); }
  [[nodiscard]] double normalization() const { return norm_; }
  [[nodiscard]] const EffectiveIndex& index() const { return index_; }

 private:
  EffectiveIndex index_;
  Parity parity_;
  double k_;
  SeriesConfig cfg_;
  double norm_ = 1.0;
};

/// Throws DomainError for |z| > k.
double eigenfunction_eval(const Level& level, const Confinement& box, double z,
                          const SeriesConfig& cfg = {}, bool normalized = false);

/// W(psi(z), psi(-z)) for psi(z) = e^{-z^2/2} H_nu(z), derivatives by
/// five-point central differences.
double wronskian(double nu, double z, const SeriesConfig& cfg = {});

/// Max relative spread (max W - min W) / max |W| over z_grid.  Requires nu
/// at least 1e-6 away from every non-negative integer and 0 < z <= min(2, k).
double wronskian_check(double nu, const Confinement& box, std::span<const double> z_grid,
                       const SeriesConfig& cfg = {});

}  // namespace boxwell

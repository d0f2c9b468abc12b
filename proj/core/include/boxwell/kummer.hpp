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

namespace boxwell {

/// Truncation policy for the Kummer series.
///
/// Summation stops once `consecutive_small` successive terms satisfy
/// |term| <= rel_tol * |partial sum|, counted only after the terms have
/// started to decrease monotonically (index beyond both t and 2|a| + 2), so
/// a transiently small early term cannot end the sum.
struct SeriesConfig {
  double rel_tol = 1e-16;
  int max_terms = 2000;
  int consecutive_small = 3;
  /// Carry terms and partial sums as CompensatedReal (double-double).
  bool high_precision = false;

  /// Throws DomainError unless rel_tol > 0, max_terms >= 16 and
  /// consecutive_small >= 1.
  void validate() const;
};

/// Value of a summed series plus diagnostics.
struct SeriesResult {
  double value = 0.0;
  /// max |term| seen, the scale against which cancellation is judged.
  double largest_term = 0.0;
  int terms = 0;
};

/// 1F1(a; b; t) = sum_s (a)_s / ((b)_s s!) t^s for t >= 0.
///
/// Throws DomainError if b is a non-positive integer or t < 0, and
/// ConvergenceError if cfg.max_terms is reached first.
double kummer_1f1(double a, double b, double t, const SeriesConfig& cfg = {});

/// As kummer_1f1, with the largest-term diagnostic.
SeriesResult kummer_1f1_detail(double a, double b, double t, const SeriesConfig& cfg = {});

/// 1F1(a; b; -t) for t >= 0 by direct summation of the alternating series.
/// Always accumulates in double-double regardless of cfg.high_precision;
/// accuracy still degrades like e^t times the unit roundoff of that format.
double kummer_1f1_alternating(double a, double b, double t, const SeriesConfig& cfg = {});

/// Decomposition 1F1(-n0 + eps; b; t) = head + eps * tail.
///
/// head sums the terms s = 0..n0, which do not contain the Pochhammer factor
/// (a + n0) = eps.  Every term with s > n0 does, and it is divided out
/// analytically, so tail is a same-signed series that keeps full relative
/// precision however small eps is.
struct SplitSum {
  double head = 0.0;
  double tail = 0.0;
  /// max over |head terms| and |eps * tail terms|.
  double largest_term = 0.0;
  int terms = 0;

  [[nodiscard]] double assemble(double eps) const { return head + eps * tail; }
};

/// Requires n0 >= 0, |eps| <= 1/2, t >= 0 and b not a non-positive integer.
SplitSum kummer_1f1_split(int n0, double eps, double b, double t, const SeriesConfig& cfg = {});

}  // namespace boxwell

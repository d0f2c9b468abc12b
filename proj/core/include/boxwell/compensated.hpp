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

namespace boxwell {

/// Unevaluated sum hi + lo of two doubles ("double-double").
///
/// Roughly 106 significand bits with the exponent range of double.  The
/// representation is kept renormalized: |lo| <= ulp(hi) / 2.  Basic
/// operations follow the error-free transformations of Dekker and Knuth;
/// products rely on std::fma being correctly rounded, so the translation
/// unit must not be built with -ffast-math.
struct CompensatedReal {
  double hi = 0.0;
  double lo = 0.0;

  constexpr CompensatedReal() = default;
  constexpr CompensatedReal(double x) : hi(x), lo(0.0) {}  // NOLINT: implicit by intent

  [[nodiscard]] constexpr double value() const { return hi + lo; }

  /// Exact sum of two doubles.
  static CompensatedReal two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return from_parts(s, err);
  }

  /// Exact product of two doubles.
  static CompensatedReal two_prod(double a, double b) {
    const double p = a * b;
    return from_parts(p, std::fma(a, b, -p));
  }

  // Requires |a| >= |b| or a == 0.
  static CompensatedReal quick_two_sum(double a, double b) {
    const double s = a + b;
    return from_parts(s, b - (s - a));
  }

  friend CompensatedReal operator-(const CompensatedReal& x) {
    return from_parts(-x.hi, -x.lo);
  }

  friend CompensatedReal operator+(const CompensatedReal& x, const CompensatedReal& y) {
    CompensatedReal s = two_sum(x.hi, y.hi);
    const CompensatedReal t = two_sum(x.lo, y.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
  }

  friend CompensatedReal operator-(const CompensatedReal& x, const CompensatedReal& y) {
    return x + (-y);
  }

  friend CompensatedReal operator*(const CompensatedReal& x, double y) {
    CompensatedReal p = two_prod(x.hi, y);
    p.lo = std::fma(x.lo, y, p.lo);
    return quick_two_sum(p.hi, p.lo);
  }

  friend CompensatedReal operator*(const CompensatedReal& x, const CompensatedReal& y) {
    CompensatedReal p = two_prod(x.hi, y.hi);
    p.lo += x.hi * y.lo + x.lo * y.hi;
    return quick_two_sum(p.hi, p.lo);
  }

  friend CompensatedReal operator/(const CompensatedReal& x, double y) {
    const double q1 = x.hi / y;
    // remainder x - q1*y, computed exactly up to the lo word
    const CompensatedReal r = x - two_prod(q1, y);
    const double q2 = r.hi / y;
    return quick_two_sum(q1, q2);
  }

  friend CompensatedReal operator/(const CompensatedReal& x, const CompensatedReal& y) {
    const double q1 = x.hi / y.hi;
    const CompensatedReal r = x - y * q1;
    const double q2 = r.hi / y.hi;
    const CompensatedReal r2 = r - y * q2;
    const double q3 = r2.hi / y.hi;
    return quick_two_sum(q1, q2) + CompensatedReal(q3);
  }

  CompensatedReal& operator+=(const CompensatedReal& y) { return *this = *this + y; }
  CompensatedReal& operator*=(double y) { return *this = *this * y; }
  CompensatedReal& operator*=(const CompensatedReal& y) { return *this = *this * y; }
  CompensatedReal& operator/=(double y) { return *this = *this / y; }

 private:
  static constexpr CompensatedReal from_parts(double h, double l) {
    CompensatedReal r;
    r.hi = h;
    r.lo = l;
    return r;
  }
};

inline double abs_value(const CompensatedReal& x) { return std::fabs(x.hi + x.lo); }

}  // namespace boxwell

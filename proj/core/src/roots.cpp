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

#include "boxwell/roots.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "boxwell/errors.hpp"

namespace boxwell {

RootResult brent_root(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, double abs_tol, double rel_tol, int max_iterations) {
  if (fa == 0.0) return {a, fa, 0};
  if (fb == 0.0) return {b, fb, 0};
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketError("brent_root: f(a) and f(b) must differ in sign");
  }
  rel_tol = std::max(rel_tol, 2.0 * std::numeric_limits<double>::epsilon());

  double c = a, fc = fa;
  double d = b - a, e = d;
  int evaluations = 0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * rel_tol * std::fabs(b) + 0.5 * abs_tol;
    const double m = 0.5 * (c - b);
    if (std::fabs(m) <= tol || fb == 0.0) {
      return {b, fb, evaluations};
    }
    if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
      // inverse quadratic interpolation, or secant when a == c
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
    ++evaluations;
  }
  throw ConvergenceError("brent_root: no convergence");
}

}  // namespace boxwell

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

#include <functional>

namespace boxwell {

struct RootResult {
  double root = 0.0;
  double value = 0.0;  // f(root)
  int evaluations = 0;
};

/// Brent's method on a sign-change bracket [a, b].  fa and fb are f(a) and
/// f(b), already known to the caller.  Stops when the bracket is narrower
/// than 2 * (rel_tol * |x| + abs_tol) or f vanishes exactly.
/// Throws BracketError if fa and fb have the same sign and ConvergenceError
/// after max_iterations.
RootResult brent_root(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, double abs_tol, double rel_tol, int max_iterations = 300);

}  // namespace boxwell

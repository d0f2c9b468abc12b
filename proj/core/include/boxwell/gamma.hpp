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

/// log|Gamma(x)| together with the sign of Gamma(x).
struct LogGamma {
  double value = 0.0;
  int sign = 1;
};

/// log|Gamma(x)| and sign.  Negative arguments go through the reflection
/// formula.  Throws PoleError at x = 0, -1, -2, ... and DomainError for
/// non-finite x.
LogGamma log_gamma(double x);

/// 1 / Gamma(x), treated as the entire function it is: exactly 0 at the
/// non-positive integers, never throws for finite x.
double reciprocal_gamma(double x);

}  // namespace boxwell

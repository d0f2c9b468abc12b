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

/// Integral of e^(u^2) over [0, k], 0 <= k <= 40.
///
/// Evaluated as e^(k^2) * D where D = int_0^k e^(v^2 - 2kv) dv comes from
/// the substitution u = k - v; the remainder integrand lies in (0, 1] and is
/// handled by adaptive Gauss-Kronrod quadrature to about 1e-13 relative.
/// Throws DomainError for k < 0 and OverflowError when k > 40 or the value
/// exceeds the double range (k above roughly 26.6); use erfi_integral_log
/// there.
double erfi_integral(double k);

/// Natural logarithm of erfi_integral(k) for any k > 0.
double erfi_integral_log(double k);

}  // namespace boxwell

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

#include "boxwell/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "boxwell/errors.hpp"

namespace boxwell {

namespace {

void check_shape(std::span<const double> diag, std::span<const double> off) {
  if (diag.empty() || off.size() + 1 != diag.size()) {
    throw DomainError("tridiagonal: off-diagonal must have exactly n - 1 entries");
  }
}

double pivot_floor(std::span<const double> off) {
  double m = 1.0;
  for (double e : off) {
    m = std::max(m, e * e);
  }
  return std::numeric_limits<double>::min() * m;
}

int count_below(std::span<const double> diag, std::span<const double> off, double x, double pivmin) {
  int negatives = 0;
  double q = diag[0] - x;
  if (std::fabs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++negatives;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    q = diag[i] - x - off[i - 1] * off[i - 1] / q;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

}  // namespace

int sturm_count(std::span<const double> diag, std::span<const double> off, double x) {
  check_shape(diag, off);
  return count_below(diag, off, x, pivot_floor(off));
}

double tridiagonal_eigenvalue(std::span<const double> diag, std::span<const double> off, int index) {
  check_shape(diag, off);
  const int n = static_cast<int>(diag.size());
  if (index < 0 || index >= n) {
    throw DomainError("tridiagonal_eigenvalue: index out of range");
  }
  const double pivmin = pivot_floor(off);

  // Gershgorin interval
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const double r = (i > 0 ? std::fabs(off[u - 1]) : 0.0) + (i + 1 < n ? std::fabs(off[u]) : 0.0);
    lo = std::min(lo, diag[u] - r);
    hi = std::max(hi, diag[u] + r);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(lo), std::fabs(hi)) + pivmin;
  lo -= pad;
  hi += pad;

  // count(lo) <= index < count(hi) throughout
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 2000; ++iter) {
    const double width_tol = 2.0 * eps * std::max(std::fabs(lo), std::fabs(hi)) + pivmin;
    if (hi - lo <= width_tol) {
      break;
    }
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (count_below(diag, off, mid, pivmin) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const int inside = count_below(diag, off, hi, pivmin) - count_below(diag, off, lo, pivmin);
  if (inside > 1) {
    throw SeparationError("tridiagonal_eigenvalue: eigenvalue " + std::to_string(index) +
                          " cannot be separated from a neighbour at machine resolution");
  }
  return lo + 0.5 * (hi - lo);
}

std::vector<double> lowest_eigenvalues(std::span<const double> diag, std::span<const double> off,
                                       int count) {
  check_shape(diag, off);
  if (count < 1 || count > static_cast<int>(diag.size())) {
    throw DomainError("lowest_eigenvalues: count must lie in [1, n]");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    out.push_back(tridiagonal_eigenvalue(diag, off, j));
  }
  return out;
}

}  // namespace boxwell

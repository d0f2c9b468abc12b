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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "boxwell/compensated.hpp"

using boxwell::CompensatedReal;

namespace {

bool renormalized(const CompensatedReal& x) {
  if (x.hi == 0.0) return x.lo == 0.0;
  const double ulp = std::nextafter(std::fabs(x.hi), std::numeric_limits<double>::infinity()) - std::fabs(x.hi);
  return std::fabs(x.lo) <= ulp;
}

}  // namespace

TEST_CASE("two_sum and two_prod are exact") {
  const CompensatedReal s = CompensatedReal::two_sum(1.0, 1e-20);
  CHECK(s.hi == 1.0);
  CHECK(s.lo == 1e-20);

  const double x = 1.0 + std::ldexp(1.0, -30);
  const CompensatedReal p = CompensatedReal::two_prod(x, x);
  CHECK(p.hi == 1.0 + std::ldexp(1.0, -29));
  CHECK(p.lo == std::ldexp(1.0, -60));
}

TEST_CASE("cancellation keeps the low word") {
  CompensatedReal big(1e16);
  big += CompensatedReal(1.0);
  big += CompensatedReal(-1e16);
  CHECK(big.value() == 1.0);

  const CompensatedReal third = CompensatedReal(1.0) / 3.0;
  const CompensatedReal back = third * 3.0 - CompensatedReal(1.0);
  CHECK(std::fabs(back.value()) < 1e-31);

  const CompensatedReal q = CompensatedReal(2.0) / CompensatedReal(third);
  CHECK(std::fabs(q.value() - 6.0) < 1e-30);
}

TEST_CASE("results stay renormalized under mixed arithmetic") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  CompensatedReal acc(0.0);
  for (int i = 0; i < 2000; ++i) {
    const double v = dist(rng);
    switch (i % 4) {
      case 0: acc += CompensatedReal(v); break;
      case 1: acc = acc * (1.0 + v * 1e-6); break;
      case 2: acc = acc / (1.0 + v * 1e-6); break;
      default: acc = acc - CompensatedReal::two_prod(v, 1e-3); break;
    }
    REQUIRE(renormalized(acc));
  }
}

TEST_CASE("harmonic-like sum beats plain double") {
  // sum_{j=1}^{N} 1/j^2 forward, against the same sum in long double backward
  constexpr int n = 200000;
  CompensatedReal dd(0.0);
  double plain = 0.0;
  long double reference = 0.0L;
  for (int j = 1; j <= n; ++j) {
    const double term = 1.0 / (static_cast<double>(j) * j);
    dd += CompensatedReal(term);
    plain += term;
  }
  for (int j = n; j >= 1; --j) {
    reference += 1.0L / (static_cast<long double>(j) * j);
  }
  const double dd_err = std::fabs(static_cast<double>(static_cast<long double>(dd.hi) + dd.lo - reference));
  const double plain_err = std::fabs(static_cast<double>(plain - reference));
  CHECK(dd_err < 1e-17);
  CHECK(dd_err < plain_err);
}

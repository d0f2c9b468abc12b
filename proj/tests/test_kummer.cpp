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
#include <numbers>
#include <random>

#include "boxwell/errors.hpp"
#include "boxwell/kummer.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using namespace boxwell;
using boxwell::testing::kummer_reference;
using boxwell::testing::rel_err;

TEST_CASE("kummer_1f1 closed forms") {
  CHECK(kummer_1f1(3.7, 0.5, 0.0) == 1.0);
  CHECK(kummer_1f1(-2.2, 1.5, 0.0) == 1.0);
  CHECK(rel_err(kummer_1f1(1.0, 1.0, 1.0), std::numbers::e) < 1e-15);
  CHECK(rel_err(kummer_1f1(1.0, 1.0, 30.0), std::exp(30.0)) < 1e-14);
  // 1F1(-3; 1/2; t) = 1 - 6t + 4t^2 - (8/15) t^3
  const double t = 2.0;
  CHECK(rel_err(kummer_1f1(-3.0, 0.5, t), 1 - 6 * t + 4 * t * t - 8.0 / 15.0 * t * t * t) < 1e-14);
}

TEST_CASE("kummer_1f1 matches the low-order expansion") {
  // nu = 1: 1F1(-1/2; 1/2; t) = 1 - t + (1 - 2) t^2 / 6 + O(t^3)
  const double t = 0.01;
  const double three_terms = 1.0 - t - t * t / 6.0;
  const double value = kummer_1f1(-0.5, 0.5, t);
  CHECK(std::fabs(value - three_terms) < 4e-8);
  CHECK(rel_err(value, static_cast<double>(kummer_reference(-0.5L, 0.5L, 0.01L))) < 1e-15);
  CHECK(std::fabs(value - 0.98998333) < 1e-7);
}

TEST_CASE("kummer_1f1 against long double summation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a_dist(-8.0, 4.0);
  std::uniform_real_distribution<double> t_dist(0.0, 40.0);
  for (int i = 0; i < 300; ++i) {
    const double a = a_dist(rng);
    const double b = (i % 3 == 0) ? 0.5 : (i % 3 == 1 ? 1.5 : 2.75);
    const double t = t_dist(rng);
    const SeriesResult r = kummer_1f1_detail(a, b, t);
    if (std::fabs(r.value) < 1e-3 * r.largest_term) continue;  // ill-conditioned sum
    const double ref = static_cast<double>(kummer_reference(a, b, t));
    CHECK_MESSAGE(rel_err(r.value, ref) < 1e-13, "a=" << a << " b=" << b << " t=" << t);
  }
}

TEST_CASE("high-precision accumulation agrees and is tighter") {
  SeriesConfig hp;
  hp.high_precision = true;
  for (double t : {5.0, 20.0, 60.0}) {
    const double ref = static_cast<double>(kummer_reference(-2.3L, 0.5L, t));
    CHECK(rel_err(kummer_1f1(-2.3, 0.5, t, hp), ref) < 1e-15);
  }
}

TEST_CASE("alternating variant") {
  CHECK(rel_err(kummer_1f1_alternating(1.0, 1.0, 20.0), std::exp(-20.0)) < 1e-13);
  // 1F1(a; a; -t) = e^{-t} for any a
  CHECK(rel_err(kummer_1f1_alternating(2.5, 2.5, 15.0), std::exp(-15.0)) < 1e-13);
}

TEST_CASE("kummer_1f1 argument checks") {
  CHECK_THROWS_AS(kummer_1f1(1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_1f1(1.0, -2.0, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_1f1(1.0, 0.5, -1.0), DomainError);
  SeriesConfig short_cfg;
  short_cfg.max_terms = 16;
  CHECK_THROWS_AS(kummer_1f1(0.3, 0.5, 100.0, short_cfg), ConvergenceError);
}

TEST_CASE("SeriesConfig validation") {
  SeriesConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.max_terms = 15;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.consecutive_small = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("early small terms do not stop the sum") {
  // a ~ -1e-20: the first terms are below rel_tol, later ones are not
  const double a = -1e-20;
  const double ref = static_cast<double>(kummer_reference(a, 0.5L, 36.0L));
  CHECK(rel_err(kummer_1f1(a, 0.5, 36.0), ref) < 1e-13);
  CHECK(std::fabs(kummer_1f1(a, 0.5, 36.0) - 1.0) > 1e-6);
}

TEST_CASE("split form: terminating case") {
  const SplitSum s = kummer_1f1_split(0, 0.0, 0.5, 36.0);
  CHECK(s.head == 1.0);
  CHECK(s.assemble(0.0) == 1.0);
  CHECK(s.tail > 0.0);
  // tail is d/da 1F1(a; 1/2; 36) at a = 0
  const double h = 1e-6;
  const double slope = (kummer_1f1(h, 0.5, 36.0) - kummer_1f1(-h, 0.5, 36.0)) / (2 * h);
  CHECK(rel_err(s.tail, slope) < 1e-6);
}

TEST_CASE("split form resolves the k = 6 ground-state root") {
  // nu = 1.55e-15 gives eps = -nu/2; the root lies within 1% of it
  const double t = 36.0;
  const SplitSum s = kummer_1f1_split(0, -7.75e-16, 0.5, t);
  CHECK(std::fabs(s.assemble(-7.75e-16)) < 1e-2);
  const double below = kummer_1f1_split(0, -0.99 * 7.75e-16, 0.5, t).assemble(-0.99 * 7.75e-16);
  const double above = kummer_1f1_split(0, -1.01 * 7.75e-16, 0.5, t).assemble(-1.01 * 7.75e-16);
  CHECK(below > 0.0);
  CHECK(above < 0.0);
}

TEST_CASE("split form equals the plain series") {
  const SplitSum s = kummer_1f1_split(1, 0.3, 0.5, 2.0);
  CHECK(rel_err(s.assemble(0.3), kummer_1f1(-0.7, 0.5, 2.0)) < 1e-12);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> eps_dist(-0.5, 0.5);
  std::uniform_real_distribution<double> t_dist(0.0, 30.0);
  for (int i = 0; i < 300; ++i) {
    const int n0 = i % 6;
    const double eps = eps_dist(rng);
    const double b = (i % 2 == 0) ? 0.5 : 1.5;
    const double t = t_dist(rng);
    const SeriesResult plain = kummer_1f1_detail(-n0 + eps, b, t);
    if (std::fabs(plain.value) <= 1e-3 * plain.largest_term) continue;
    const double split = kummer_1f1_split(n0, eps, b, t).assemble(eps);
    CHECK_MESSAGE(rel_err(split, plain.value) < 1e-11, "n0=" << n0 << " eps=" << eps << " t=" << t);
  }
}

TEST_CASE("split form keeps relative precision of tiny eps") {
  // head + eps*tail at eps = 1e-40 differs from head by exactly eps*tail
  const SplitSum s = kummer_1f1_split(2, 1e-40, 1.5, 100.0);
  const SplitSum s0 = kummer_1f1_split(2, 0.0, 1.5, 100.0);
  CHECK(s.head == s0.head);
  CHECK(rel_err(s.tail, s0.tail) < 1e-12);
  SeriesConfig hp;
  hp.high_precision = true;
  CHECK(rel_err(kummer_1f1_split(2, 1e-40, 1.5, 100.0, hp).tail, s.tail) < 1e-13);
}

TEST_CASE("split argument checks") {
  CHECK_THROWS_AS(kummer_1f1_split(-1, 0.1, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_1f1_split(1, 0.6, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_1f1_split(1, 0.1, 0.5, -1.0), DomainError);
}

TEST_CASE("property: Kummer transformation") {
  const auto r = boxwell::testing::kummer_transformation();
  INFO("worst " << r.worst << " at " << r.detail);
  CHECK(r.pass);
}

TEST_CASE("property: Kummer ODE residual") {
  const auto r = boxwell::testing::kummer_ode_residual();
  INFO("worst " << r.worst << " at " << r.detail);
  CHECK(r.pass);
}

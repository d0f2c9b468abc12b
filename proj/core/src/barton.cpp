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

#include "boxwell/barton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hermite.hpp>

#include "boxwell/errors.hpp"
#include "boxwell/hermite.hpp"
#include "boxwell/quadrature.hpp"

namespace boxwell {

namespace {

constexpr int kMaxAsymptoticLevel = 150;

double log_sqrt_pi() { return 0.5 * std::log(std::numbers::pi); }

}  // namespace

std::string_view to_string(BartonMethod method) {
  return method == BartonMethod::asymptotic ? "asymptotic" : "integral";
}

double barton_leading_term(int n, double k) {
  if (n < 0) {
    throw DomainError("barton_leading_term: n must be non-negative");
  }
  if (n > kMaxAsymptoticLevel) {
    throw OverflowError("barton_leading_term: n! 2^n overflows for n > 150");
  }
  if (!(k > 0.0)) {
    throw DomainError("barton_leading_term: k must be positive");
  }
  const double log_value = std::log(n + 0.5) + std::log(2.0) - std::log(2.0 * n + 1.0) - log_sqrt_pi() -
                           boost::math::lgamma(n + 1.0) - n * std::log(2.0) +
                           (2.0 * n + 1.0) * std::log(2.0 * k) - k * k;
  return std::exp(log_value);
}

BartonEstimate barton_ground_asym(const Confinement& box) {
  const double k = box.k();
  const double e0 = 0.5;
  BartonEstimate out;
  out.value = e0 * (2.0 / std::sqrt(std::numbers::pi)) * (2.0 * k) * std::exp(-k * k);
  out.method = BartonMethod::asymptotic;
  out.n = 0;
  out.k = k;
  return out;
}

BartonEstimate barton_excited_asym(const Level& level, const Confinement& box) {
  if (level.n() < 1) {
    throw DomainError("barton_excited_asym: requires n >= 1");
  }
  BartonEstimate out;
  out.value = barton_leading_term(level.n(), box.k());
  out.method = BartonMethod::asymptotic;
  out.n = level.n();
  out.k = box.k();
  return out;
}

BartonEstimate barton_asym(const Level& level, const Confinement& box) {
  return level.n() == 0 ? barton_ground_asym(box) : barton_excited_asym(level, box);
}

BartonEstimate barton_ground_integral(const Confinement& box) {
  BartonEstimate out;
  out.value = std::exp(-log_sqrt_pi() - erfi_integral_log(box.k()));
  out.method = BartonMethod::integral;
  out.n = 0;
  out.k = box.k();
  return out;
}

double default_a_cutoff(const Level& level, const Confinement& box) {
  if (level.n() < 1) {
    throw DomainError("default_a_cutoff: requires n >= 1");
  }
  const double node = hermite_largest_zero(level.n());
  if (!(box.k() > node)) {
    throw DomainError("default_a_cutoff: the wall lies inside the last node of H_n");
  }
  return 0.5 * (node + box.k());
}

BartonEstimate barton_excited_integral(const Level& level, const Confinement& box, double a_cutoff) {
  const int n = level.n();
  if (n < 1) {
    throw DomainError("barton_excited_integral: requires n >= 1");
  }
  const double k = box.k();
  const double node = hermite_largest_zero(n);
  if (!(a_cutoff > node) || !(a_cutoff < k)) {
    throw DomainError("barton_excited_integral: a_cutoff must lie strictly between the last node of H_n and k");
  }
  // u = k - v pulls the e^{k^2} growth out of the integrand.
  auto integrand = [n, k](double v) {
    const double h = boost::math::hermite(static_cast<unsigned>(n), k - v);
    return std::exp(v * (v - 2.0 * k)) / (h * h);
  };
  double error = 0.0;
  const double remainder =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, k - a_cutoff, 20, 1e-13, &error);
  const double log_norm = log_sqrt_pi() + n * std::log(2.0) + boost::math::lgamma(n + 1.0);
  BartonEstimate out;
  out.value = std::exp(-k * k - log_norm - std::log(remainder));
  out.method = BartonMethod::integral;
  out.n = n;
  out.k = k;
  out.a_cutoff = a_cutoff;
  return out;
}

ObliquityRecord obliquity(const Level& level, const Confinement& box, const SeriesConfig& cfg) {
  return {level.n(), box.k(), shift(level, box, cfg) / barton_asym(level, box).value};
}

ObliquitySummary obliquity_summary(const Confinement& box, std::span<const int> levels,
                                   const SeriesConfig& cfg) {
  if (levels.empty()) {
    throw DomainError("obliquity_summary: no levels given");
  }
  ObliquitySummary out;
  out.k = box.k();
  double sum = 0.0;
  out.min = std::numeric_limits<double>::infinity();
  out.max = -out.min;
  for (int n : levels) {
    const ObliquityRecord r = obliquity(Level(n), box, cfg);
    out.levels.push_back(r);
    sum += r.ratio;
    out.min = std::min(out.min, r.ratio);
    out.max = std::max(out.max, r.ratio);
  }
  out.mean = sum / static_cast<double>(levels.size());
  return out;
}

}  // namespace boxwell

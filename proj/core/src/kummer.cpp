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

#include "boxwell/kummer.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "boxwell/compensated.hpp"
#include "boxwell/errors.hpp"

namespace boxwell {

namespace {

void check_b(double b) {
  if (!std::isfinite(b) || (b <= 0.0 && b == std::floor(b))) {
    throw DomainError("kummer_1f1: b must be finite and not a non-positive integer");
  }
}

void check_t(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("kummer_1f1: t must be finite and non-negative");
  }
}

double magnitude(double x) { return std::fabs(x); }
double magnitude(const CompensatedReal& x) { return abs_value(x); }
double to_double(double x) { return x; }
double to_double(const CompensatedReal& x) { return x.value(); }

// term * (a + s) * t / ((b + s) * (s + 1)); `shift` is (a + s) supplied by
// the caller so the split tail can pass (s - n0) + eps without rounding eps
// away.
double next_term(double term, double shift, double b, double t, int s) {
  return term * (shift * t) / ((b + s) * (s + 1.0));
}

CompensatedReal next_term(const CompensatedReal& term, const CompensatedReal& shift, double b,
                          double t, int s) {
  const CompensatedReal den = CompensatedReal::two_sum(b, static_cast<double>(s)) * (s + 1.0);
  return term * shift * t / den;
}

double shift_of(double a, int s, double) { return a + s; }
CompensatedReal shift_of(double a, int s, CompensatedReal) {
  return CompensatedReal::two_sum(a, static_cast<double>(s));
}

// Index from which the term ratio |(a+s) t / ((b+s)(s+1))| is monotone
// decreasing; below it the stopping test is not trusted.
double monotone_from(double a, double t) { return std::max(std::fabs(t), 2.0 * std::fabs(a) + 2.0); }

[[noreturn]] void fail_convergence(const char* what, double a, double b, double t, int max_terms) {
  throw ConvergenceError(std::string(what) + ": no convergence within " + std::to_string(max_terms) +
                         " terms (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                         ", t=" + std::to_string(t) + ")");
}

template <typename Real>
SeriesResult sum_plain(double a, double b, double t, const SeriesConfig& cfg) {
  Real term(1.0);
  Real sum(1.0);
  SeriesResult out;
  out.largest_term = 1.0;
  out.terms = 1;
  if (t == 0.0) {
    out.value = 1.0;
    return out;
  }
  const double guard = monotone_from(a, t);
  int small = 0;
  for (int s = 0; s < cfg.max_terms; ++s) {
    if (a + s == 0.0) {  // terminating series
      out.value = to_double(sum);
      return out;
    }
    term = next_term(term, shift_of(a, s, Real{}), b, t, s);
    sum += term;
    ++out.terms;
    const double mag = magnitude(term);
    out.largest_term = std::max(out.largest_term, mag);
    if (s + 1 >= guard && mag <= cfg.rel_tol * magnitude(sum)) {
      if (++small >= cfg.consecutive_small) {
        out.value = to_double(sum);
        return out;
      }
    } else {
      small = 0;
    }
  }
  fail_convergence("kummer_1f1", a, b, t, cfg.max_terms);
}

// a + s written as (s - n0) + eps; exact in the compensated path.
template <typename Real>
Real split_shift(int s, int n0, double eps) {
  if constexpr (std::is_same_v<Real, double>) {
    return static_cast<double>(s - n0) + eps;
  } else {
    return CompensatedReal::two_sum(static_cast<double>(s - n0), eps);
  }
}

template <typename Real>
SplitSum sum_split(int n0, double eps, double b, double t, const SeriesConfig& cfg) {
  SplitSum out;
  const double a = -static_cast<double>(n0) + eps;
  Real term(1.0);
  Real head(1.0);
  out.largest_term = 1.0;
  out.terms = 1;
  for (int s = 0; s < n0; ++s) {
    term = next_term(term, split_shift<Real>(s, n0, eps), b, t, s);
    head += term;
    ++out.terms;
    out.largest_term = std::max(out.largest_term, magnitude(term));
  }
  out.head = to_double(head);
  if (t == 0.0) {
    return out;
  }
  // First tail term: T_{n0} * t / ((b + n0)(n0 + 1)), the (n0+1)-th series
  // term with the factor eps removed.
  term = next_term(term, Real(1.0), b, t, n0);
  Real tail = term;
  ++out.terms;
  out.largest_term = std::max(out.largest_term, std::fabs(eps) * magnitude(term));
  const double guard = monotone_from(a, t);
  int small = 0;
  for (int s = n0 + 1; s < n0 + cfg.max_terms; ++s) {
    term = next_term(term, split_shift<Real>(s, n0, eps), b, t, s);
    tail += term;
    ++out.terms;
    const double mag = magnitude(term);
    out.largest_term = std::max(out.largest_term, std::fabs(eps) * mag);
    if (s + 1 >= guard && mag <= cfg.rel_tol * magnitude(tail)) {
      if (++small >= cfg.consecutive_small) {
        out.tail = to_double(tail);
        return out;
      }
    } else {
      small = 0;
    }
  }
  fail_convergence("kummer_1f1_split", a, b, t, cfg.max_terms);
}

}  // namespace

void SeriesConfig::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw DomainError("SeriesConfig: rel_tol must be positive");
  }
  if (max_terms < 16) {
    throw DomainError("SeriesConfig: max_terms must be at least 16");
  }
  if (consecutive_small < 1) {
    throw DomainError("SeriesConfig: consecutive_small must be at least 1");
  }
}

SeriesResult kummer_1f1_detail(double a, double b, double t, const SeriesConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a)) {
    throw DomainError("kummer_1f1: a must be finite");
  }
  check_b(b);
  check_t(t);
  return cfg.high_precision ? sum_plain<CompensatedReal>(a, b, t, cfg) : sum_plain<double>(a, b, t, cfg);
}

double kummer_1f1(double a, double b, double t, const SeriesConfig& cfg) {
  return kummer_1f1_detail(a, b, t, cfg).value;
}

double kummer_1f1_alternating(double a, double b, double t, const SeriesConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a)) {
    throw DomainError("kummer_1f1_alternating: a must be finite");
  }
  check_b(b);
  check_t(t);
  return sum_plain<CompensatedReal>(a, b, -t, cfg).value;
}

SplitSum kummer_1f1_split(int n0, double eps, double b, double t, const SeriesConfig& cfg) {
  cfg.validate();
  if (n0 < 0) {
    throw DomainError("kummer_1f1_split: n0 must be non-negative");
  }
  if (!std::isfinite(eps) || std::fabs(eps) > 0.5) {
    throw DomainError("kummer_1f1_split: |eps| must not exceed 1/2");
  }
  check_b(b);
  check_t(t);
  return cfg.high_precision ? sum_split<CompensatedReal>(n0, eps, b, t, cfg)
                            : sum_split<double>(n0, eps, b, t, cfg);
}

}  // namespace boxwell

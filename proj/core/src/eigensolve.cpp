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

#include "boxwell/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "boxwell/errors.hpp"
#include "boxwell/hermite.hpp"
#include "boxwell/roots.hpp"

namespace boxwell {

namespace {

constexpr double kScanStep = 0.25;
constexpr int kScanBudget = 400000;
constexpr double kDeltaRegime = 1e-3;
constexpr int kProbeFirstExponent = -50;
constexpr int kProbeLastExponent = -1;
constexpr int kDeltaIterations = 50;
// Below this fraction of the largest term the plain series is not trusted.
constexpr double kCancellationRatio = 1e-3;

double kummer_b(Parity p) { return p == Parity::even ? 0.5 : 1.5; }

double kummer_a(Parity p, double nu) { return p == Parity::even ? -0.5 * nu : 0.5 * (1.0 - nu); }

int first_level(Parity p) { return p == Parity::even ? 0 : 1; }

std::string describe(int n, double k) {
  std::ostringstream os;
  os << "level n=" << n << " at k=" << k;
  return os.str();
}

// Kummer parameters near a = -n0: split (n0, eps) with eps = a + n0.
struct SplitPoint {
  int n0;
  double eps;
};

SplitPoint nearest_split(double a) {
  const double n0 = std::max(0.0, std::round(-a));
  return {static_cast<int>(n0), a + n0};
}

// Boundary function for level rank m at nu = 2m (+1) + delta, delta <= 1.
SplitSum split_at_delta(Parity p, int m, double delta, double t, const SeriesConfig& cfg) {
  return kummer_1f1_split(m, -0.5 * delta, kummer_b(p), t, cfg);
}

double g_delta(Parity p, int m, double delta, double t, const SeriesConfig& cfg) {
  return split_at_delta(p, m, delta, t, cfg).assemble(-0.5 * delta);
}

bool opposite(double x, double y) { return (x < 0.0 && y > 0.0) || (x > 0.0 && y < 0.0); }

void fill_residual(EffectiveIndex& out, Parity p, double t, const SeriesConfig& cfg) {
  SplitSum s;
  double eps = 0.0;
  if (out.delta <= 1.0) {
    eps = -0.5 * out.delta;
    s = split_at_delta(p, out.n / 2, out.delta, t, cfg);
  } else {
    const SplitPoint sp = nearest_split(kummer_a(p, out.nu));
    eps = sp.eps;
    s = kummer_1f1_split(sp.n0, sp.eps, kummer_b(p), t, cfg);
  }
  out.residual = s.assemble(eps);
  out.residual_scale = s.largest_term;
}

EffectiveIndex make_index(int n, double delta, RootMethod method) {
  EffectiveIndex out;
  out.n = n;
  out.delta = delta;
  out.nu = n + delta;
  out.method = method;
  return out;
}

EffectiveIndex refine(Parity p, int n, double lo, double hi, double flo, double fhi,
                      const Confinement& box, const SeriesConfig& cfg) {
  const double t = box.t();
  const int m = n / 2;
  EffectiveIndex out;

  if (lo == static_cast<double>(n)) {
    // Root within a quarter of its own integer: work in delta, where the
    // split form resolves offsets far below the spacing of doubles near n.
    auto g = [&](double d) { return g_delta(p, m, d, t, cfg); };
    const double g0 = g(0.0);
    double prev = 0.0;
    double gprev = g0;
    double hit = -1.0;
    double ghit = 0.0;
    for (int e = kProbeFirstExponent; e <= kProbeLastExponent; ++e) {
      const double probe = std::pow(10.0, e);
      const double gp = g(probe);
      if (opposite(gp, g0) || gp == 0.0) {
        hit = probe;
        ghit = gp;
        break;
      }
      prev = probe;
      gprev = gp;
    }
    if (hit > 0.0 && hit <= kDeltaRegime) {
      out = delta_iteration(Level(n), box, cfg, prev);
      // The fixed point must sit inside the probe bracket; otherwise it
      // belongs to another branch.
      if (out.delta < 0.5 * prev || out.delta > 2.0 * hit) {
        throw ConvergenceError("delta iteration left its bracket for " + describe(n, box.k()));
      }
      return out;
    }
    if (hit < 0.0) {
      hit = hi - n;
      ghit = fhi;
    }
    const RootResult r = brent_root(g, prev, hit, gprev, ghit, std::numeric_limits<double>::min(),
                                    2.0 * std::numeric_limits<double>::epsilon());
    out = make_index(n, r.root, RootMethod::brent);
  } else {
    auto f = [&](double nu) { return quantization_function(p, nu, box, cfg); };
    const RootResult r = brent_root(f, lo, hi, flo, fhi, 1e-15, std::numeric_limits<double>::epsilon());
    out = make_index(n, r.root - n, RootMethod::brent);
    out.nu = r.root;
  }
  if (!(out.delta > 0.0)) {
    throw BracketError("root lies below its level index for " + describe(n, box.k()));
  }
  fill_residual(out, p, t, cfg);
  return out;
}

}  // namespace

std::string_view to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

std::string_view to_string(RootMethod method) {
  return method == RootMethod::brent ? "brent" : "delta-iteration";
}

Confinement::Confinement(double k) : k_(k) {
  if (!std::isfinite(k) || !(k > 0.0)) {
    throw DomainError("confinement k must be finite and strictly positive");
  }
}

Level::Level(int n) : n_(n) {
  if (n < 0) {
    throw DomainError("level index n must be non-negative");
  }
}

double quantization_function(Parity parity, double nu, const Confinement& box, const SeriesConfig& cfg) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw DomainError("quantization function: nu must be finite and non-negative");
  }
  const double a = kummer_a(parity, nu);
  const double b = kummer_b(parity);
  const double t = box.t();
  const SplitPoint sp = nearest_split(a);
  const bool splittable = std::fabs(sp.eps) <= 0.5;
  // |nu - integer| < 1e-3  <=>  |eps| < 5e-4
  if (splittable && std::fabs(sp.eps) < 0.5 * kDeltaRegime) {
    return kummer_1f1_split(sp.n0, sp.eps, b, t, cfg).assemble(sp.eps);
  }
  const SeriesResult plain = kummer_1f1_detail(a, b, t, cfg);
  if (splittable && std::fabs(plain.value) < kCancellationRatio * plain.largest_term) {
    return kummer_1f1_split(sp.n0, sp.eps, b, t, cfg).assemble(sp.eps);
  }
  return plain.value;
}

double f_even(double nu, const Confinement& box, const SeriesConfig& cfg) {
  return quantization_function(Parity::even, nu, box, cfg);
}

double f_odd(double nu, const Confinement& box, const SeriesConfig& cfg) {
  return quantization_function(Parity::odd, nu, box, cfg);
}

std::vector<EffectiveIndex> enumerate_roots(Parity parity, const Confinement& box, int count,
                                            const SeriesConfig& cfg) {
  if (count < 1) {
    throw DomainError("enumerate_roots: count must be at least 1");
  }
  std::vector<EffectiveIndex> roots;
  roots.reserve(static_cast<std::size_t>(count));
  double nu_prev = 0.0;
  double f_prev = quantization_function(parity, nu_prev, box, cfg);
  for (int step = 1; step <= kScanBudget; ++step) {
    const double nu = step * kScanStep;
    const double f = quantization_function(parity, nu, box, cfg);
    if (opposite(f_prev, f) || f == 0.0) {
      const int n = first_level(parity) + 2 * static_cast<int>(roots.size());
      if (f == 0.0) {
        EffectiveIndex exact = make_index(n, nu - n, RootMethod::brent);
        exact.nu = nu;
        if (!(exact.delta > 0.0)) {
          throw BracketError("root lies below its level index for " + describe(n, box.k()));
        }
        fill_residual(exact, parity, box.t(), cfg);
        roots.push_back(exact);
        f_prev = -f_prev;  // continue as if just past the root
      } else {
        roots.push_back(refine(parity, n, nu_prev, nu, f_prev, f, box, cfg));
        f_prev = f;
      }
      if (static_cast<int>(roots.size()) == count) {
        return roots;
      }
    } else {
      f_prev = f;
    }
    nu_prev = nu;
  }
  throw BracketError("enumerate_roots: scan budget exhausted before " + describe(
                         first_level(parity) + 2 * static_cast<int>(roots.size()), box.k()));
}

EffectiveIndex delta_iteration(const Level& level, const Confinement& box, const SeriesConfig& cfg,
                               double initial_delta) {
  if (!(initial_delta >= 0.0) || initial_delta >= kDeltaRegime) {
    throw DomainError("delta_iteration: initial delta must lie in [0, 1e-3)");
  }
  const Parity p = level.parity();
  const int n = level.n();
  const double t = box.t();
  double delta = initial_delta;
  double change = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kDeltaIterations; ++i) {
    const SplitSum s = split_at_delta(p, level.rank(), delta, t, cfg);
    const double next = 2.0 * s.head / s.tail;
    if (!std::isfinite(next) || !(next > 0.0)) {
      throw ConvergenceError("delta_iteration: no positive root adjacent to " + describe(n, box.k()));
    }
    if (next >= kDeltaRegime) {
      throw ConvergenceError("delta_iteration: root of " + describe(n, box.k()) +
                             " is not within 1e-3 of the integer");
    }
    change = std::fabs(next - delta);
    delta = next;
    if (change <= 1e-14 * delta) {
      break;
    }
  }
  if (change > 1e-3 * delta) {
    throw ConvergenceError("delta_iteration: no convergence after 50 iterations for " +
                           describe(n, box.k()));
  }
  EffectiveIndex out = make_index(n, delta, RootMethod::delta_iteration);
  fill_residual(out, p, t, cfg);
  return out;
}

EffectiveIndex level_nu(const Level& level, const Confinement& box, const SeriesConfig& cfg) {
  return enumerate_roots(level.parity(), box, level.rank() + 1, cfg).back();
}

double shift(const Level& level, const Confinement& box, const SeriesConfig& cfg) {
  return level_nu(level, box, cfg).delta;
}

std::vector<SpectrumRow> spectrum(const Confinement& box, int n_max, const SeriesConfig& cfg) {
  if (n_max < 0) {
    throw DomainError("spectrum: n_max must be non-negative");
  }
  auto solve = [&](Parity p, int count) {
    if (count == 0) return std::vector<EffectiveIndex>{};
    try {
      return enumerate_roots(p, box, count, cfg);
    } catch (const NumericalError& e) {
      std::ostringstream os;
      os << "spectrum(k=" << box.k() << ", n_max=" << n_max << "), " << to_string(p)
         << " levels: " << e.what();
      throw ConvergenceError(os.str());
    }
  };
  const std::vector<EffectiveIndex> even = solve(Parity::even, n_max / 2 + 1);
  const std::vector<EffectiveIndex> odd = solve(Parity::odd, (n_max + 1) / 2);

  std::vector<SpectrumRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    const EffectiveIndex& idx = (n % 2 == 0) ? even[static_cast<std::size_t>(n / 2)]
                                             : odd[static_cast<std::size_t>(n / 2)];
    SpectrumRow row;
    row.k = box.k();
    row.n = n;
    row.parity = Level(n).parity();
    row.nu = idx.nu;
    row.delta = idx.delta;
    row.energy_confined = idx.nu + 0.5;
    row.energy_free = n + 0.5;
    row.shift = idx.delta;
    rows.push_back(row);
  }
  return rows;
}

Eigenfunction::Eigenfunction(const EffectiveIndex& index, const Confinement& box, const SeriesConfig& cfg)
    : index_(index), parity_(Level(index.n).parity()), k_(box.k()), cfg_(cfg) {
  // Trapezoid rule; psi^2 and its derivative vanish at both walls, so the
  // error is O(h^4).
  constexpr int intervals = 4000;
  const double h = 2.0 * k_ / intervals;
  double sum = 0.0;
  for (int i = 1; i < intervals; ++i) {
    const double v = basis(-k_ + i * h);
    sum += v * v;
  }
  const double ends = basis(-k_) * basis(-k_) + basis(k_) * basis(k_);
  const double integral = h * (sum + 0.5 * ends);
  norm_ = 1.0 / std::sqrt(integral);
}

double Eigenfunction::basis(double z) const {
  if (!std::isfinite(z) || std::fabs(z) > k_ * (1.0 + 1e-12)) {
    throw DomainError("eigenfunction: z lies outside the box");
  }
  const double t = z * z;
  double u;
  if (index_.delta <= 1.0) {
    const double eps = -0.5 * index_.delta;
    u = kummer_1f1_split(index_.n / 2, eps, kummer_b(parity_), t, cfg_).assemble(eps);
  } else {
    u = kummer_1f1(kummer_a(parity_, index_.nu), kummer_b(parity_), t, cfg_);
  }
  if (parity_ == Parity::odd) {
    u *= z;
  }
  return u * std::exp(-0.5 * t);
}

double eigenfunction_eval(const Level& level, const Confinement& box, double z, const SeriesConfig& cfg,
                          bool normalized) {
  if (!std::isfinite(z) || std::fabs(z) > box.k() * (1.0 + 1e-12)) {
    throw DomainError("eigenfunction_eval: z lies outside the box");
  }
  const Eigenfunction psi(level_nu(level, box, cfg), box, cfg);
  return normalized ? psi(z) : psi.basis(z);
}

double wronskian(double nu, double z, const SeriesConfig& cfg) {
  auto psi = [&](double x) { return std::exp(-0.5 * x * x) * hermite_nu(nu, x, cfg); };
  auto derivative = [&](double x) {
    constexpr double h = 1e-3;
    return (-psi(x + 2 * h) + 8.0 * psi(x + h) - 8.0 * psi(x - h) + psi(x - 2 * h)) / (12.0 * h);
  };
  // d/dz [psi(-z)] = -psi'(-z)
  return psi(z) * (-derivative(-z)) - psi(-z) * derivative(z);
}

double wronskian_check(double nu, const Confinement& box, std::span<const double> z_grid,
                       const SeriesConfig& cfg) {
  if (!std::isfinite(nu) || (nu > -1e-6 && std::fabs(nu - std::round(nu)) < 1e-6)) {
    throw DomainError("wronskian_check: nu must be at least 1e-6 away from a non-negative integer");
  }
  if (z_grid.empty()) {
    throw DomainError("wronskian_check: empty z grid");
  }
  const double z_max = std::min(2.0, box.k());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double scale = 0.0;
  for (double z : z_grid) {
    if (!(z > 0.0) || z > z_max) {
      throw DomainError("wronskian_check: grid points must lie in (0, min(2, k)]");
    }
    const double w = wronskian(nu, z, cfg);
    lo = std::min(lo, w);
    hi = std::max(hi, w);
    scale = std::max(scale, std::fabs(w));
  }
  return scale > 0.0 ? (hi - lo) / scale : 0.0;
}

}  // namespace boxwell

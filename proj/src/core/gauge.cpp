// Copyright 2026 The ebound Authors
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

#include "core/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ebound {

namespace {

void require_nonneg_finite(double t, const char* what) {
  if (!std::isfinite(t) || t < 0)
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " must be finite and nonnegative");
}

// Adaptive Simpson on [a, b] to absolute tolerance; `budget` caps the number
// of subintervals.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double tol,
                        int depth, long* budget) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || --(*budget) <= 0 || std::abs(delta) <= 15 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1, budget) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1, budget);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, long* budget) {
  if (b <= a) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, tol, 48, budget);
}

}  // namespace

Gauge Gauge::linear(double tau) {
  if (!(tau > 0) || !std::isfinite(tau))
    throw Error(ErrorCode::invalid_argument, "linear gauge needs tau > 0");
  Gauge g;
  g.kind_ = GaugeKind::linear;
  g.class_ = GaugeClass::c1;
  g.tau_ = tau;
  g.q_ = 1.0;
  g.dm_noninc_ = g.dm_nondec_ = true;  // constant derivative
  g.cv_convex_ = g.cv_concave_ = true;
  return g;
}

Gauge Gauge::hoelder(double tau, double q) {
  if (!(tau > 0) || !(q > 0) || !std::isfinite(tau) || !std::isfinite(q))
    throw Error(ErrorCode::invalid_argument, "hoelder gauge needs tau > 0 and q > 0");
  if (q == 1.0) return linear(tau);
  Gauge g;
  g.kind_ = GaugeKind::hoelder;
  g.class_ = GaugeClass::c1;
  g.tau_ = tau;
  g.q_ = q;
  g.dm_noninc_ = q < 1.0;
  g.dm_nondec_ = q > 1.0;
  g.cv_concave_ = q < 1.0;
  g.cv_convex_ = q > 1.0;
  return g;
}

Gauge Gauge::nu_integral(std::vector<std::pair<double, double>> nu_table) {
  if (nu_table.size() < 2)
    throw Error(ErrorCode::invalid_argument, "nu table needs at least two points");
  std::sort(nu_table.begin(), nu_table.end());
  if (nu_table.front().first != 0.0)
    throw Error(ErrorCode::invalid_argument, "nu table must start at s = 0");
  double prev = -kInf;
  for (const auto& [s, v] : nu_table) {
    if (!std::isfinite(s) || !std::isfinite(v) || v < 0)
      throw Error(ErrorCode::invalid_argument, "nu table entries must be finite, nu >= 0");
    if (v < prev)
      throw Error(ErrorCode::invalid_argument, "nu must be nondecreasing");
    if (s > 0 && v <= 0)
      throw Error(ErrorCode::invalid_argument, "nu must be positive for s > 0");
    prev = v;
  }
  if (nu_table.back().second <= 0)
    throw Error(ErrorCode::invalid_argument, "nu must be eventually positive");
  Gauge g;
  g.kind_ = GaugeKind::nu_integral;
  g.class_ = GaugeClass::c1;
  g.nu_ = std::move(nu_table);
  g.dm_nondec_ = true;   // phi' = nu nondecreasing
  g.dm_noninc_ = false;
  g.cv_convex_ = true;
  g.cv_concave_ = false;
  return g;
}

Gauge Gauge::custom(std::function<double(double)> eval,
                    std::function<double(double)> derivative, GaugeClass cls,
                    bool deriv_nonincreasing, bool deriv_nondecreasing,
                    bool convex, bool concave) {
  if (!eval) throw Error(ErrorCode::invalid_argument, "custom gauge needs an evaluator");
  if (cls == GaugeClass::c1 && !derivative)
    throw Error(ErrorCode::invalid_argument, "c1 custom gauge needs a derivative");
  Gauge g;
  g.kind_ = GaugeKind::custom;
  g.class_ = cls;
  g.custom_eval_ = std::move(eval);
  g.custom_deriv_ = std::move(derivative);
  g.dm_noninc_ = deriv_nonincreasing;
  g.dm_nondec_ = deriv_nondecreasing;
  g.cv_convex_ = convex;
  g.cv_concave_ = concave;
  if (g.custom_eval_(0.0) != 0.0)
    throw Error(ErrorCode::invalid_argument, "gauge must satisfy phi(0) = 0");
  // Spot-check declared derivative monotonicity on a log grid.
  if (g.custom_deriv_ && (deriv_nonincreasing || deriv_nondecreasing)) {
    double prev = kInf * (deriv_nonincreasing ? 1.0 : -1.0);
    for (int i = 0; i < 64; ++i) {
      double t = std::pow(10.0, -6.0 + 12.0 * i / 63.0);
      double dv = g.custom_deriv_(t);
      if (deriv_nonincreasing && dv > prev * (1 + 1e-9) + 1e-12)
        throw Error(ErrorCode::invalid_argument,
                    "declared nonincreasing derivative fails the sampled check");
      if (deriv_nondecreasing && i > 0 && dv < prev * (1 - 1e-9) - 1e-12)
        throw Error(ErrorCode::invalid_argument,
                    "declared nondecreasing derivative fails the sampled check");
      prev = dv;
    }
    g.monotonicity_sampled_ = true;
  }
  return g;
}

Gauge Gauge::scaled(double k) const {
  if (!(k > 0) || !std::isfinite(k))
    throw Error(ErrorCode::invalid_argument, "gauge scale must be positive");
  Gauge g = *this;
  switch (kind_) {
    case GaugeKind::linear:
      g.tau_ = tau_ / k;
      break;
    case GaugeKind::hoelder:
      g.tau_ = tau_ / k;
      break;
    default:
      g.scale_ = scale_ * k;
      break;
  }
  return g;
}

double Gauge::eval(double t) const {
  require_nonneg_finite(t, "gauge argument");
  switch (kind_) {
    case GaugeKind::linear:
      return t / tau_;
    case GaugeKind::hoelder:
      return std::pow(t, q_) / tau_;
    case GaugeKind::nu_integral: {
      // Integrate the interpolant piecewise so breakpoints never straddle a
      // Simpson panel.
      auto nu = [this](double s) { return nu_at(s); };
      long budget = 10000;
      double acc = 0.0;
      double lo = 0.0;
      for (std::size_t i = 1; i < nu_.size() && lo < t; ++i) {
        double hi = std::min(nu_[i].first, t);
        if (hi > lo) acc += integrate(nu, lo, hi, 1e-12, &budget);
        lo = std::max(lo, nu_[i].first);
      }
      if (t > lo) acc += integrate(nu, lo, t, 1e-12, &budget);
      return scale_ * acc;
    }
    case GaugeKind::custom:
      return scale_ * custom_eval_(t);
  }
  throw Error(ErrorCode::internal, "bad gauge kind");
}

double Gauge::nu_at(double t) const {
  if (kind_ != GaugeKind::nu_integral)
    throw Error(ErrorCode::invalid_argument, "nu_at requires a nu_integral gauge");
  require_nonneg_finite(t, "nu argument");
  if (t >= nu_.back().first) return scale_ * nu_.back().second;
  std::size_t hi = 1;
  while (nu_[hi].first < t) ++hi;
  const auto& [s0, v0] = nu_[hi - 1];
  const auto& [s1, v1] = nu_[hi];
  double w = s1 > s0 ? (t - s0) / (s1 - s0) : 0.0;
  return scale_ * (v0 + w * (v1 - v0));
}

double Gauge::derivative(double t) const {
  if (class_ != GaugeClass::c1)
    throw Error(ErrorCode::invalid_argument, "derivative requires a C1 gauge");
  if (!std::isfinite(t) || t <= 0)
    throw Error(ErrorCode::invalid_argument,
                "gauge derivative pole: t must be positive");
  switch (kind_) {
    case GaugeKind::linear:
      return 1.0 / tau_;
    case GaugeKind::hoelder:
      return q_ * std::pow(t, q_ - 1.0) / tau_;
    case GaugeKind::nu_integral:
      return nu_at(t);
    case GaugeKind::custom:
      return scale_ * custom_deriv_(t);
  }
  throw Error(ErrorCode::internal, "bad gauge kind");
}

double Gauge::inverse(double s) const {
  if (class_ != GaugeClass::c1)
    throw Error(ErrorCode::invalid_argument, "inverse requires a C1 gauge");
  require_nonneg_finite(s, "gauge inverse argument");
  if (s == 0) return 0.0;
  switch (kind_) {
    case GaugeKind::linear:
      return tau_ * s;
    case GaugeKind::hoelder:
      return std::pow(tau_ * s, 1.0 / q_);
    default:
      break;
  }
  // Bracketed monotone root-find: phi is strictly increasing and unbounded.
  double hi = 1.0;
  int grow = 0;
  while (eval(hi) < s) {
    hi *= 2.0;
    if (++grow > 400)
      throw Error(ErrorCode::numeric_failure, "gauge inverse: no upper bracket");
  }
  double lo = 0.0;
  double t = 0.5 * hi;
  for (int it = 0; it < 200; ++it) {
    double v = eval(t) - s;
    if (v > 0)
      hi = t;
    else
      lo = t;
    double width = hi - lo;
    if (width <= 1e-12 * std::max(1.0, hi)) return 0.5 * (lo + hi);
    // Newton step when usable, bisection otherwise.
    double tn = t;
    if (t > 0) {
      double d = derivative(t);
      if (d > 0 && std::isfinite(d)) tn = t - v / d;
    }
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    t = tn;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "gauge inverse: no convergence, bracket [%.12g, %.12g]", lo, hi);
  throw Error(ErrorCode::numeric_failure, buf);
}

Gauge::GrowthResult Gauge::check_growth(double N,
                                        const std::vector<double>& t_grid) const {
  if (class_ != GaugeClass::c1)
    throw Error(ErrorCode::invalid_argument, "growth check requires a C1 gauge");
  if (!(N > 0)) throw Error(ErrorCode::invalid_argument, "growth check needs N > 0");
  if (t_grid.empty())
    throw Error(ErrorCode::invalid_argument, "growth check needs a nonempty grid");
  double sup = 0;
  int skipped = 0;
  for (double t : t_grid) {
    if (!(t > 0)) {
      ++skipped;
      continue;
    }
    double d;
    try {
      d = derivative(t);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    if (!(d > 0) || !std::isfinite(d)) {
      ++skipped;
      continue;
    }
    sup = std::max(sup, eval(N * t) / (t * d));
  }
  return {sup < 1e12, sup, skipped};
}

std::string Gauge::describe() const {
  char buf[128];
  switch (kind_) {
    case GaugeKind::linear:
      std::snprintf(buf, sizeof buf, "linear(tau=%g)", tau_);
      break;
    case GaugeKind::hoelder:
      std::snprintf(buf, sizeof buf, "hoelder(tau=%g,q=%g)", tau_, q_);
      break;
    case GaugeKind::nu_integral:
      std::snprintf(buf, sizeof buf, "nu_integral(%zu pts, scale=%g)", nu_.size(),
                    scale_);
      break;
    case GaugeKind::custom:
      std::snprintf(buf, sizeof buf, "custom(scale=%g)", scale_);
      break;
  }
  return buf;
}

double gauge_eval_extended(const Gauge& g, double t) {
  if (t <= 0) return 0.0;
  if (std::isinf(t)) return kInf;
  return g.eval(t);
}

}  // namespace ebound

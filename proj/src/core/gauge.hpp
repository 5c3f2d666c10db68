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

#ifndef EBOUND_CORE_GAUGE_HPP_
#define EBOUND_CORE_GAUGE_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "core/types.hpp"

namespace ebound {

enum class GaugeKind { linear, hoelder, nu_integral, custom };
enum class GaugeClass { c_only, c1 };

/// Nonlinearity of an error bound: a function phi on the nonnegative reals
/// with phi(0) = 0 and phi(t) > 0 for t > 0. The c1 class additionally has a
/// positive continuous derivative on ]0, inf[ and grows without bound, so the
/// inverse is total on the nonnegative axis.
///
/// Kinds:
///   linear       phi(t) = t / tau
///   hoelder      phi(t) = t^q / tau
///   nu_integral  phi(t) = integral_0^t nu(s) ds, nu a nondecreasing
///                piecewise-linear table (extended by its last value)
///   custom       user evaluator; monotonicity metadata is spot-checked on a
///                64-point log grid and flagged as sampled
class Gauge {
 public:
  static Gauge linear(double tau);
  static Gauge hoelder(double tau, double q);
  static Gauge nu_integral(std::vector<std::pair<double, double>> nu_table);
  static Gauge custom(std::function<double(double)> eval,
                      std::function<double(double)> derivative,  // may be null
                      GaugeClass cls, bool deriv_nonincreasing,
                      bool deriv_nondecreasing, bool convex, bool concave);

  /// k * phi with the same structure; inverse maps s -> phi^{-1}(s / k).
  Gauge scaled(double k) const;

  double eval(double t) const;
  double derivative(double t) const;
  double inverse(double s) const;

  /// For nu_integral kind, evaluates nu(t) directly.
  double nu_at(double t) const;

  struct GrowthResult {
    bool finite;
    double gamma;          // sup of phi(N t) / (t phi'(t)) over the grid
    int skipped;           // grid points with a derivative pole
  };
  /// Grid-sup estimate of the growth coefficient; evidence, not a proof.
  GrowthResult check_growth(double N, const std::vector<double>& t_grid) const;

  GaugeKind kind() const { return kind_; }
  GaugeClass gauge_class() const { return class_; }
  bool in_c1() const { return class_ == GaugeClass::c1; }
  double tau() const { return tau_; }
  double exponent() const { return q_; }
  double scale() const { return scale_; }
  bool deriv_nonincreasing() const { return dm_noninc_; }
  bool deriv_nondecreasing() const { return dm_nondec_; }
  bool is_convex() const { return cv_convex_; }
  bool is_concave() const { return cv_concave_; }
  bool monotonicity_sampled() const { return monotonicity_sampled_; }
  std::string describe() const;

 private:
  Gauge() = default;

  GaugeKind kind_ = GaugeKind::linear;
  GaugeClass class_ = GaugeClass::c1;
  double tau_ = 1.0;
  double q_ = 1.0;
  double scale_ = 1.0;
  bool dm_noninc_ = true;
  bool dm_nondec_ = true;
  bool cv_convex_ = true;
  bool cv_concave_ = true;
  bool monotonicity_sampled_ = false;
  std::vector<std::pair<double, double>> nu_;
  std::function<double(double)> custom_eval_;
  std::function<double(double)> custom_deriv_;
};

/// Convenience: phi extended by zero on the negatives, as used when composing
/// a gauge with an extended-real-valued function.
double gauge_eval_extended(const Gauge& g, double t);

}  // namespace ebound

#endif  // EBOUND_CORE_GAUGE_HPP_

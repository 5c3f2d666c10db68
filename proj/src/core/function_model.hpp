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

#ifndef EBOUND_CORE_FUNCTION_MODEL_HPP_
#define EBOUND_CORE_FUNCTION_MODEL_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "core/gauge.hpp"
#include "core/polytope.hpp"
#include "core/types.hpp"

namespace ebound {

/// Representation tiers. Certificates (exact verdicts) are only produced on
/// the structured tiers; blackbox evaluation yields sampled diagnostics.
enum class Tier { max_affine, max_smooth, blackbox };

struct AffinePiece {
  Vec a;
  double b;
};

struct SmoothPiece {
  std::function<double(const Vec&)> eval;
  std::function<Vec(const Vec&)> grad;
};

/// Extended-real-valued function on R^n. Values in R union {+inf}; +inf
/// encodes points outside the effective domain. Blackbox models return +inf
/// outside their domain box; the structured tiers are finite everywhere.
/// Immutable after construction.
class FunctionModel {
 public:
  static FunctionModel max_affine(std::vector<AffinePiece> pieces, Box box);
  static FunctionModel max_smooth(int dim, std::vector<SmoothPiece> pieces,
                                  Box box, bool convex);
  static FunctionModel blackbox(int dim, std::function<double(const Vec&)> eval,
                                Box box, bool convex_declared = false);

  double evaluate(const Vec& x) const;

  int dim() const { return dim_; }
  Tier tier() const { return tier_; }
  const Box& domain_box() const { return box_; }
  bool is_convex() const { return convex_; }
  Norm norm() const { return norm_; }
  FunctionModel with_norm(Norm n) const;

  int piece_count() const;
  double piece_value(int i, const Vec& x) const;
  Vec piece_gradient(int i, const Vec& x) const;
  const std::vector<AffinePiece>& affine_pieces() const { return affine_; }

  /// {x : f(x) <= c} for the max_affine tier.
  Polyhedron sublevel_polyhedron(double c) const;

 private:
  FunctionModel() = default;

  int dim_ = 0;
  Tier tier_ = Tier::blackbox;
  Box box_;
  Norm norm_ = Norm::euclidean;
  bool convex_ = false;
  std::vector<AffinePiece> affine_;
  std::vector<SmoothPiece> smooth_;
  std::function<double(const Vec&)> eval_;
};

/// max(f, 0); the max_affine tier stays exact by appending the zero piece.
FunctionModel positive_part(const FunctionModel& f);

/// phi composed with f, with phi extended by zero on the negatives so the
/// zero-sublevel set is unchanged. Linear gauges preserve the structured
/// tier; anything else drops to blackbox.
FunctionModel compose_gauge(const Gauge& g, const FunctionModel& f);

/// k * f for k > 0.
FunctionModel scale_function(const FunctionModel& f, double k);

struct SublevelQuery {
  double level = 0.0;
  Vec x;
  Box region;
  int grid_per_axis = 0;  // 0 = default by dimension
  int depth = 40;         // bisection refinement depth (blackbox tier)
};

enum class DistanceExactness { exact, sampled, empty_in_box };

struct DistanceResult {
  double value;
  std::optional<Vec> witness;
  DistanceExactness flag;
};

/// Distance oracle for one sublevel set [f <= c]. Precomputes the polyhedron
/// (max_affine) or the feasible grid scan (otherwise); queries are cheap and
/// deterministic (grid ties break at the lowest linear index).
class SublevelOracle {
 public:
  SublevelOracle(const FunctionModel& f, double level, Box region,
                 int grid_per_axis = 0, int depth = 40);

  DistanceResult distance(const Vec& x) const;
  bool exact_tier() const { return poly_.has_value(); }
  double level() const { return level_; }

 private:
  const FunctionModel* f_;
  double level_;
  Box region_;
  int depth_;
  std::optional<Polyhedron> poly_;
  std::vector<Vec> feasible_;
};

DistanceResult sublevel_distance(const FunctionModel& f, const SublevelQuery& q);

}  // namespace ebound

#endif  // EBOUND_CORE_FUNCTION_MODEL_HPP_

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

#ifndef EBOUND_CORE_POLYTOPE_HPP_
#define EBOUND_CORE_POLYTOPE_HPP_

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "core/types.hpp"

namespace ebound {

/// Polyhedron {x : A x <= b}.
struct Polyhedron {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;

  int dim() const { return static_cast<int>(A.cols()); }
  int rows() const { return static_cast<int>(A.rows()); }
  bool contains(const Vec& x, double tol = 1e-9) const;
};

struct ProjectResult {
  Vec point;        // nearest point of the polyhedron (valid iff feasible)
  double distance;  // +inf when the polyhedron is empty
  bool feasible;
};

/// Euclidean projection onto {A x <= b} by a dual active-set scheme
/// (nonnegative least squares on the multipliers). Exact up to the linear
/// algebra; throws numeric_failure if the active-set loop stalls.
ProjectResult project_euclidean(const Polyhedron& P, const Vec& x);

/// Chebyshev (max-norm) projection onto {A x <= b}, solved as the linear
/// program  min t  s.t.  A u <= b, |u - x| <= t componentwise.
ProjectResult project_chebyshev(const Polyhedron& P, const Vec& x);

struct LPResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status;
  Vec x;
  double value;
};

/// Dense two-phase simplex with Bland's rule for
///   min c^T x  s.t.  A x <= b,  x free.
LPResult solve_lp(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                  const Eigen::VectorXd& b);

struct MinNormResult {
  Vec point;
  double norm;
  int iterations;
  double gap;  // final duality gap
};

/// Minimum Euclidean-norm element of conv(generators) by pairwise
/// conditional-gradient steps with exact line search. Stops at duality gap
/// 1e-10; throws numeric_failure carrying the best iterate past 1e5 steps.
MinNormResult min_norm_point(const std::vector<Vec>& generators);

/// Minimum l1-norm element of conv(generators), via LP. Used for slope
/// computations under the Chebyshev metric (dual norm of l-inf).
MinNormResult min_norm_point_l1(const std::vector<Vec>& generators);

/// Fourier-Motzkin elimination: projects {z : A z <= b} onto the first
/// `keep` coordinates. Returns rows (p, r) meaning p^T z' <= r, or nullopt
/// if the row count exceeds `max_rows` on the way.
std::optional<std::vector<std::pair<Vec, double>>> fm_project(
    const Eigen::MatrixXd& A, const Eigen::VectorXd& b, int keep,
    std::size_t max_rows = 4096);

}  // namespace ebound

#endif  // EBOUND_CORE_POLYTOPE_HPP_

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

#ifndef EBOUND_CORE_TYPES_HPP_
#define EBOUND_CORE_TYPES_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ebound {

using Vec = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Error codes shared with the C API.
enum class ErrorCode : int {
  invalid_argument = 1,
  numeric_failure = 2,
  unsupported_tier = 3,
  precondition = 4,
  parse_error = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Norm on R^n used for distances and slope difference quotients.
enum class Norm { euclidean, chebyshev };

double norm_of(const Vec& v, Norm norm);
double dist(const Vec& a, const Vec& b, Norm norm);
double dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add_scaled(const Vec& a, double s, const Vec& b);  // a + s*b

/// Axis-aligned box; every coordinate axis carries a [lo, hi] range.
struct Box {
  std::vector<std::array<double, 2>> axes;

  int dim() const { return static_cast<int>(axes.size()); }
  bool empty() const { return axes.empty(); }
  bool contains(const Vec& x) const;
  bool degenerate() const;  // some axis has width <= 0
  double max_width() const;
  Vec center() const;
  Vec clamp(const Vec& x) const;

  static Box cube(int dim, double lo, double hi);
};

/// Full product grid over a box; `per_axis` points per coordinate.
/// Linear index order is row-major with the last axis fastest, so reductions
/// that break ties by lowest linear index are reproducible.
std::vector<Vec> grid_points(const Box& box, int per_axis);

/// Per-axis coordinates of the same grid (for CSV tables etc).
std::vector<double> linspace(double lo, double hi, int n);

/// Deterministic direction set of `count` vectors with unit `norm` length.
/// For dim 1 the set is {+1, -1}; for dim 2 equally spaced angles; for dim 3
/// a Fibonacci sphere; higher dimensions draw seeded Gaussian directions.
std::vector<Vec> unit_directions(int dim, int count, Norm norm, std::uint64_t seed);

/// Default grid density per axis by dimension (401 / 101 / 41 / 21).
int default_grid(int dim);

/// a >= b within absolute+relative slack.
inline bool geq_tol(double a, double b, double tol = 1e-9) {
  return a >= b - tol * std::max(1.0, std::abs(b));
}

/// Strict violation test: lhs > rhs beyond slack.
inline bool violates_leq(double lhs, double rhs, double tol = 1e-9) {
  if (std::isinf(lhs) && lhs > 0) return !(std::isinf(rhs) && rhs > 0);
  if (std::isinf(rhs) && rhs > 0) return false;
  return lhs > rhs + tol * std::max(1.0, std::abs(rhs));
}

}  // namespace ebound

#endif  // EBOUND_CORE_TYPES_HPP_

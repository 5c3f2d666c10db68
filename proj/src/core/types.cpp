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

#include "core/types.hpp"

#include <algorithm>
#include <random>

namespace ebound {

double norm_of(const Vec& v, Norm norm) {
  if (norm == Norm::euclidean) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dist(const Vec& a, const Vec& b, Norm norm) {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_argument, "dimension mismatch");
  if (norm == Norm::euclidean) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      double d = a[i] - b[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec add_scaled(const Vec& a, double s, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
  return r;
}

bool Box::contains(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (x[i] < axes[i][0] || x[i] > axes[i][1]) return false;
  }
  return true;
}

bool Box::degenerate() const {
  for (const auto& ax : axes) {
    if (!(ax[1] > ax[0])) return true;
  }
  return axes.empty();
}

double Box::max_width() const {
  double w = 0;
  for (const auto& ax : axes) w = std::max(w, ax[1] - ax[0]);
  return w;
}

Vec Box::center() const {
  Vec c(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i) c[i] = 0.5 * (axes[i][0] + axes[i][1]);
  return c;
}

Vec Box::clamp(const Vec& x) const {
  Vec r = x;
  for (std::size_t i = 0; i < axes.size() && i < x.size(); ++i) {
    r[i] = std::min(std::max(r[i], axes[i][0]), axes[i][1]);
  }
  return r;
}

Box Box::cube(int dim, double lo, double hi) {
  Box b;
  b.axes.assign(dim, {lo, hi});
  return b;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(0.5 * (lo + hi));
    return out;
  }
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

std::vector<Vec> grid_points(const Box& box, int per_axis) {
  const int d = box.dim();
  std::vector<std::vector<double>> coords(d);
  for (int i = 0; i < d; ++i) coords[i] = linspace(box.axes[i][0], box.axes[i][1], per_axis);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= coords[i].size();
  std::vector<Vec> pts;
  pts.reserve(total);
  Vec x(d);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t r = k;
    for (int i = d - 1; i >= 0; --i) {
      idx[i] = r % coords[i].size();
      r /= coords[i].size();
    }
    for (int i = 0; i < d; ++i) x[i] = coords[i][idx[i]];
    pts.push_back(x);
  }
  return pts;
}

std::vector<Vec> unit_directions(int dim, int count, Norm norm, std::uint64_t seed) {
  std::vector<Vec> dirs;
  if (dim == 1) {
    dirs.push_back({1.0});
    dirs.push_back({-1.0});
    return dirs;
  }
  if (dim == 2) {
    dirs.reserve(count);
    for (int i = 0; i < count; ++i) {
      double ang = 2.0 * M_PI * i / count;
      dirs.push_back({std::cos(ang), std::sin(ang)});
    }
  } else if (dim == 3) {
    // Fibonacci sphere
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    dirs.reserve(count);
    for (int i = 0; i < count; ++i) {
      double y = 1.0 - 2.0 * (i + 0.5) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - y * y));
      double th = golden * i;
      dirs.push_back({r * std::cos(th), y, r * std::sin(th)});
    }
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    dirs.reserve(count);
    for (int i = 0; i < count; ++i) {
      Vec d(dim);
      double n2 = 0;
      do {
        for (int j = 0; j < dim; ++j) d[j] = gauss(rng);
        n2 = norm_of(d, Norm::euclidean);
      } while (n2 < 1e-12);
      for (int j = 0; j < dim; ++j) d[j] /= n2;
      dirs.push_back(std::move(d));
    }
  }
  for (auto& d : dirs) {
    double n = norm_of(d, norm);
    for (auto& v : d) v /= n;
  }
  return dirs;
}

int default_grid(int dim) {
  switch (dim) {
    case 1: return 401;
    case 2: return 101;
    case 3: return 41;
    default: return 21;
  }
}

}  // namespace ebound

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

#include "core/polytope.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>

namespace ebound {

bool Polyhedron::contains(const Vec& x, double tol) const {
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), x.size());
  Eigen::VectorXd r = A * xv - b;
  for (int i = 0; i < r.size(); ++i) {
    if (r(i) > tol * std::max(1.0, std::abs(b(i)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

namespace {

struct Tableau {
  Eigen::MatrixXd T;          // m x N
  Eigen::VectorXd rhs;        // m
  std::vector<int> basis;     // basic column per row
  std::vector<char> allowed;  // columns permitted to enter
  int m = 0, N = 0;
  double tol = 1e-9;

  void pivot(int r, int c) {
    double p = T(r, c);
    T.row(r) /= p;
    rhs(r) /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = T(i, c);
      if (f != 0.0) {
        T.row(i) -= f * T.row(r);
        rhs(i) -= f * rhs(r);
      }
    }
    basis[r] = c;
  }

  // Minimizes obj over the current tableau with Bland's rule.
  // Returns false on unboundedness.
  bool run(const Eigen::VectorXd& obj) {
    std::vector<char> is_basic(N, 0);
    for (int i = 0; i < m; ++i) is_basic[basis[i]] = 1;
    for (long iter = 0; iter < 200000; ++iter) {
      Eigen::VectorXd obj_b(m);
      for (int i = 0; i < m; ++i) obj_b(i) = obj(basis[i]);
      int enter = -1;
      for (int j = 0; j < N; ++j) {
        if (!allowed[j] || is_basic[j]) continue;
        double rc = obj(j) - obj_b.dot(T.col(j));
        if (rc < -tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = kInf;
      for (int i = 0; i < m; ++i) {
        double a = T(i, enter);
        if (a > tol) {
          double ratio = rhs(i) / a;
          if (ratio < best - 1e-12 ||
              (ratio < best + 1e-12 && (leave < 0 || basis[i] < basis[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;
      is_basic[basis[leave]] = 0;
      is_basic[enter] = 1;
      pivot(leave, enter);
    }
    throw Error(ErrorCode::numeric_failure, "simplex iteration cap reached");
  }
};

}  // namespace

LPResult solve_lp(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                  const Eigen::VectorXd& b) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (c.size() != n || b.size() != m)
    throw Error(ErrorCode::invalid_argument, "LP dimension mismatch");

  // Row scaling for conditioning.
  Eigen::MatrixXd As = A;
  Eigen::VectorXd bs = b;
  for (int i = 0; i < m; ++i) {
    double s = std::max(As.row(i).cwiseAbs().maxCoeff(), std::abs(bs(i)));
    if (s > 0) {
      As.row(i) /= s;
      bs(i) /= s;
    }
  }

  // Columns: u(n), v(n), slack(m), artificials(appended for flipped rows).
  std::vector<int> art_rows;
  for (int i = 0; i < m; ++i) {
    if (bs(i) < 0) art_rows.push_back(i);
  }
  const int n_art = static_cast<int>(art_rows.size());
  const int N = 2 * n + m + n_art;

  Tableau tb;
  tb.m = m;
  tb.N = N;
  tb.T = Eigen::MatrixXd::Zero(m, N);
  tb.rhs = Eigen::VectorXd::Zero(m);
  tb.basis.assign(m, -1);
  tb.allowed.assign(N, 1);

  std::vector<int> art_col(m, -1);
  int next_art = 2 * n + m;
  for (int i = 0; i < m; ++i) {
    double sgn = bs(i) < 0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) {
      tb.T(i, j) = sgn * As(i, j);
      tb.T(i, n + j) = -sgn * As(i, j);
    }
    tb.T(i, 2 * n + i) = sgn;
    tb.rhs(i) = sgn * bs(i);
    if (sgn < 0) {
      art_col[i] = next_art;
      tb.T(i, next_art) = 1.0;
      tb.basis[i] = next_art;
      ++next_art;
    } else {
      tb.basis[i] = 2 * n + i;
    }
  }

  if (n_art > 0) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(N);
    for (int i = 0; i < m; ++i) {
      if (art_col[i] >= 0) phase1(art_col[i]) = 1.0;
    }
    if (!tb.run(phase1))
      throw Error(ErrorCode::internal, "phase-1 LP unbounded");
    double infeas = 0;
    for (int i = 0; i < m; ++i) infeas += phase1(tb.basis[i]) * tb.rhs(i);
    if (infeas > 1e-7) return {LPResult::Status::infeasible, {}, kInf};
    // Drive remaining artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (tb.basis[i] >= 2 * n + m) {
        for (int j = 0; j < 2 * n + m; ++j) {
          if (std::abs(tb.T(i, j)) > 1e-7) {
            tb.pivot(i, j);
            break;
          }
        }
      }
    }
    for (int j = 2 * n + m; j < N; ++j) tb.allowed[j] = 0;
  }

  Eigen::VectorXd obj = Eigen::VectorXd::Zero(N);
  for (int j = 0; j < n; ++j) {
    obj(j) = c(j);
    obj(n + j) = -c(j);
  }
  if (!tb.run(obj)) return {LPResult::Status::unbounded, {}, -kInf};

  Vec x(n, 0.0);
  for (int i = 0; i < m; ++i) {
    int bcol = tb.basis[i];
    if (bcol < n)
      x[bcol] += tb.rhs(i);
    else if (bcol < 2 * n)
      x[bcol - n] -= tb.rhs(i);
  }
  double value = 0;
  for (int j = 0; j < n; ++j) value += c(j) * x[j];
  return {LPResult::Status::optimal, std::move(x), value};
}

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

ProjectResult project_chebyshev(const Polyhedron& P, const Vec& x) {
  const int n = P.dim();
  const int m = P.rows();
  if (static_cast<int>(x.size()) != n)
    throw Error(ErrorCode::invalid_argument, "projection point dimension mismatch");
  if (P.contains(x, 1e-12)) return {x, 0.0, true};

  // Variables (u, t).
  Eigen::MatrixXd A(m + 2 * n, n + 1);
  Eigen::VectorXd b(m + 2 * n);
  A.setZero();
  A.block(0, 0, m, n) = P.A;
  b.head(m) = P.b;
  for (int j = 0; j < n; ++j) {
    A(m + j, j) = 1.0;
    A(m + j, n) = -1.0;
    b(m + j) = x[j];
    A(m + n + j, j) = -1.0;
    A(m + n + j, n) = -1.0;
    b(m + n + j) = -x[j];
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  c(n) = 1.0;
  LPResult lp = solve_lp(c, A, b);
  if (lp.status == LPResult::Status::infeasible) return {{}, kInf, false};
  if (lp.status != LPResult::Status::optimal)
    throw Error(ErrorCode::numeric_failure, "chebyshev projection LP failed");
  Vec u(lp.x.begin(), lp.x.begin() + n);
  return {std::move(u), std::max(0.0, lp.value), true};
}

ProjectResult project_euclidean(const Polyhedron& P, const Vec& x) {
  const int n = P.dim();
  const int m = P.rows();
  if (static_cast<int>(x.size()) != n)
    throw Error(ErrorCode::invalid_argument, "projection point dimension mismatch");
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
  if (P.contains(x, 1e-12)) return {x, 0.0, true};

  const double scale =
      std::max({1.0, xv.cwiseAbs().maxCoeff(), P.b.cwiseAbs().maxCoeff(),
                P.A.cwiseAbs().maxCoeff()});
  const double kkt_tol = 1e-11 * scale;

  // Dual active-set (Lawson-Hanson on the multipliers):
  //   min_{lam >= 0}  0.5 || A^T lam - x ||^2 + b^T lam,    u = x - A^T lam.
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(m);
  std::vector<int> free_set;
  std::vector<char> in_free(m, 0);
  Eigen::VectorXd u = xv;

  const int max_outer = 100 + 10 * m;
  for (int outer = 0; outer < max_outer; ++outer) {
    Eigen::VectorXd grad = P.b - P.A * u;  // slack; negative means violated
    int enter = -1;
    double most = -kkt_tol;
    for (int i = 0; i < m; ++i) {
      if (in_free[i]) continue;
      if (grad(i) < most) {
        most = grad(i);
        enter = i;
      }
    }
    if (enter < 0) {
      Vec pt(u.data(), u.data() + n);
      return {std::move(pt), (xv - u).norm(), true};
    }
    free_set.push_back(enter);
    in_free[enter] = 1;

    for (int inner = 0; inner < 4 * m + 16; ++inner) {
      const int k = static_cast<int>(free_set.size());
      Eigen::MatrixXd Af(k, n);
      Eigen::VectorXd bf(k);
      for (int i = 0; i < k; ++i) {
        Af.row(i) = P.A.row(free_set[i]);
        bf(i) = P.b(free_set[i]);
      }
      Eigen::MatrixXd G = Af * Af.transpose();
      Eigen::VectorXd rhs = Af * xv - bf;
      Eigen::VectorXd lam_new =
          G.completeOrthogonalDecomposition().solve(rhs);

      bool all_nonneg = true;
      for (int i = 0; i < k; ++i) {
        if (lam_new(i) < -1e-12) {
          all_nonneg = false;
          break;
        }
      }
      if (all_nonneg) {
        lam.setZero();
        for (int i = 0; i < k; ++i) lam(free_set[i]) = std::max(0.0, lam_new(i));
        break;
      }
      // Step from the old multipliers toward lam_new until a component hits 0.
      double gamma = 1.0;
      for (int i = 0; i < k; ++i) {
        if (lam_new(i) < 0) {
          double old = lam(free_set[i]);
          double g = old / std::max(old - lam_new(i), 1e-300);
          gamma = std::min(gamma, g);
        }
      }
      for (int i = 0; i < k; ++i) {
        int idx = free_set[i];
        lam(idx) = lam(idx) + gamma * (lam_new(i) - lam(idx));
      }
      for (int i = k - 1; i >= 0; --i) {
        if (lam(free_set[i]) <= 1e-13) {
          lam(free_set[i]) = 0.0;
          in_free[free_set[i]] = 0;
          free_set.erase(free_set.begin() + i);
        }
      }
      if (free_set.empty()) break;
    }

    u = xv - P.A.transpose() * lam;
    if (lam.lpNorm<Eigen::Infinity>() > 1e14) break;  // dual blow-up
  }

  // Either the polyhedron is empty (dual unbounded) or the loop stalled.
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  LPResult feas = solve_lp(zero, P.A, P.b);
  if (feas.status == LPResult::Status::infeasible) return {{}, kInf, false};
  throw Error(ErrorCode::numeric_failure, "euclidean projection active set stalled");
}

// ---------------------------------------------------------------------------
// Minimum-norm point
// ---------------------------------------------------------------------------

MinNormResult min_norm_point(const std::vector<Vec>& gens) {
  const std::size_t k = gens.size();
  if (k < 1 || k > 10000)
    throw Error(ErrorCode::invalid_argument, "generator count out of range");
  const std::size_t d = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != d) throw Error(ErrorCode::invalid_argument, "generator dimension mismatch");
    for (double v : g)
      if (!std::isfinite(v)) throw Error(ErrorCode::invalid_argument, "non-finite generator");
  }
  if (k == 1) return {gens[0], norm_of(gens[0], Norm::euclidean), 0, 0.0};

  std::size_t start = 0;
  double best_n = norm_of(gens[0], Norm::euclidean);
  for (std::size_t j = 1; j < k; ++j) {
    double nj = norm_of(gens[j], Norm::euclidean);
    if (nj < best_n - 1e-15) {
      best_n = nj;
      start = j;
    }
  }

  std::vector<double> lambda(k, 0.0);
  lambda[start] = 1.0;
  Vec w = gens[start];

  const int max_iter = 100000;
  double gap = kInf;
  for (int iter = 0; iter < max_iter; ++iter) {
    // Toward vertex: most aligned with -w.
    std::size_t s = 0;
    double min_dp = kInf;
    for (std::size_t j = 0; j < k; ++j) {
      double dp = dot(w, gens[j]);
      if (dp < min_dp - 1e-18) {
        min_dp = dp;
        s = j;
      }
    }
    gap = dot(w, w) - min_dp;
    if (gap <= 1e-10) return {w, norm_of(w, Norm::euclidean), iter, gap};

    // Away vertex among the support.
    std::size_t a = s;
    double max_dp = -kInf;
    for (std::size_t j = 0; j < k; ++j) {
      if (lambda[j] <= 0) continue;
      double dp = dot(w, gens[j]);
      if (dp > max_dp + 1e-18) {
        max_dp = dp;
        a = j;
      }
    }
    Vec dir = sub(gens[s], gens[a]);
    double denom = dot(dir, dir);
    if (denom <= 1e-30) return {w, norm_of(w, Norm::euclidean), iter, gap};
    double step = std::min(-dot(w, dir) / denom, lambda[a]);
    if (step <= 0) return {w, norm_of(w, Norm::euclidean), iter, gap};
    lambda[s] += step;
    lambda[a] -= step;
    if (lambda[a] < 1e-15) lambda[a] = 0;
    w = add_scaled(w, step, dir);
    if ((iter & 127) == 127) {
      // periodic recompute against drift
      std::fill(w.begin(), w.end(), 0.0);
      for (std::size_t j = 0; j < k; ++j) {
        if (lambda[j] > 0) w = add_scaled(w, lambda[j], gens[j]);
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "min_norm_point: gap %.3e after %d iterations (best norm %.12g)", gap,
                max_iter, norm_of(w, Norm::euclidean));
  throw Error(ErrorCode::numeric_failure, buf);
}

MinNormResult min_norm_point_l1(const std::vector<Vec>& gens) {
  const std::size_t k = gens.size();
  if (k < 1 || k > 10000)
    throw Error(ErrorCode::invalid_argument, "generator count out of range");
  const std::size_t d = gens[0].size();
  if (k == 1) {
    double s = 0;
    for (double v : gens[0]) s += std::abs(v);
    return {gens[0], s, 0, 0.0};
  }

  // Variables (lambda_1..k, s_1..d); rows enforce the hull combination and
  // |w_j| <= s_j with w = sum lambda_i g_i.
  const int nv = static_cast<int>(k + d);
  const int nr = static_cast<int>(k + 2 + 2 * d);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nr, nv);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(nr);
  int r = 0;
  for (std::size_t i = 0; i < k; ++i, ++r) A(r, static_cast<int>(i)) = -1.0;
  for (std::size_t i = 0; i < k; ++i) A(r, static_cast<int>(i)) = 1.0;
  b(r++) = 1.0;
  for (std::size_t i = 0; i < k; ++i) A(r, static_cast<int>(i)) = -1.0;
  b(r++) = -1.0;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < k; ++i) A(r, static_cast<int>(i)) = gens[i][j];
    A(r, static_cast<int>(k + j)) = -1.0;
    ++r;
    for (std::size_t i = 0; i < k; ++i) A(r, static_cast<int>(i)) = -gens[i][j];
    A(r, static_cast<int>(k + j)) = -1.0;
    ++r;
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(nv);
  for (std::size_t j = 0; j < d; ++j) c(static_cast<int>(k + j)) = 1.0;
  LPResult lp = solve_lp(c, A, b);
  if (lp.status != LPResult::Status::optimal)
    throw Error(ErrorCode::numeric_failure, "l1 min-norm LP failed");
  Vec w(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < k; ++i) w[j] += lp.x[i] * gens[i][j];
  }
  return {std::move(w), std::max(0.0, lp.value), 0, 0.0};
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin projection
// ---------------------------------------------------------------------------

namespace {

// Key on the (normalized) coefficient vector only; dedupe keeps the
// tightest right-hand side per distinct row.
std::string row_key(const Vec& coef) {
  std::string key;
  char buf[32];
  for (double c : coef) {
    std::snprintf(buf, sizeof buf, "%.9g,", c);
    key += buf;
  }
  return key;
}

}  // namespace

std::optional<std::vector<std::pair<Vec, double>>> fm_project(
    const Eigen::MatrixXd& A, const Eigen::VectorXd& b, int keep,
    std::size_t max_rows) {
  const int total = static_cast<int>(A.cols());
  std::vector<std::pair<Vec, double>> rows;
  rows.reserve(A.rows());
  for (int i = 0; i < A.rows(); ++i) {
    Vec coef(total);
    for (int j = 0; j < total; ++j) coef[j] = A(i, j);
    rows.emplace_back(std::move(coef), b(i));
  }

  auto normalize = [](std::pair<Vec, double>& row) {
    double s = 0;
    for (double c : row.first) s = std::max(s, std::abs(c));
    if (s > 0) {
      for (double& c : row.first) c /= s;
      row.second /= s;
    }
  };

  for (int var = total - 1; var >= keep; --var) {
    std::vector<std::pair<Vec, double>> pos, neg, zero;
    for (auto& row : rows) {
      double c = row.first[var];
      if (c > 1e-12)
        pos.push_back(row);
      else if (c < -1e-12)
        neg.push_back(row);
      else
        zero.push_back(row);
    }
    std::vector<std::pair<Vec, double>> next = std::move(zero);
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        double cp = p.first[var];
        double cq = -q.first[var];
        Vec coef(var);
        for (int j = 0; j < var; ++j) coef[j] = p.first[j] / cp + q.first[j] / cq;
        double rhs = p.second / cp + q.second / cq;
        next.emplace_back(std::move(coef), rhs);
      }
    }
    for (auto& row : next) {
      row.first.resize(var);
      normalize(row);
    }
    // Deduplicate, keeping the tightest right-hand side per coefficient row,
    // and drop trivially true rows.
    std::map<std::string, std::pair<Vec, double>> uniq;
    for (auto& row : next) {
      double maxc = 0;
      for (double c : row.first) maxc = std::max(maxc, std::abs(c));
      if (maxc < 1e-12 && row.second >= -1e-12) continue;
      std::string key = row_key(row.first);
      auto it = uniq.find(key);
      if (it == uniq.end() || row.second < it->second.second) {
        uniq[key] = row;
      }
    }
    rows.clear();
    for (auto& kv : uniq) rows.push_back(std::move(kv.second));
    if (rows.size() > max_rows) return std::nullopt;
  }
  return rows;
}

}  // namespace ebound

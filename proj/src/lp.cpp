// Copyright 2026 The tcspan Authors.
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

#include "tcspan/lp.hpp"

#include <cmath>
#include <limits>

#include "tcspan/common.hpp"

namespace tcspan {

namespace {

constexpr double kPivotTol = 1e-9;

class Tableau {
 public:
  Tableau(const LinearProgram& lp, double eps) : eps_(eps) {
    const int r = static_cast<int>(lp.rows.size());
    n_ = lp.num_vars;
    int slacks = 0, arts = 0;
    for (const auto& row : lp.rows) {
      bool flip = row.rhs < 0;
      auto s = effective_sense(row.sense, flip);
      if (s != LinearProgram::Sense::kEq) ++slacks;
      if (s != LinearProgram::Sense::kLe) ++arts;
    }
    art_begin_ = n_ + slacks;
    cols_ = art_begin_ + arts;
    rows_ = r;
    t_.assign(static_cast<size_t>(rows_) * (cols_ + 1), 0.0);
    basis_.assign(rows_, -1);
    unit_col_.assign(rows_, -1);
    flipped_.assign(rows_, 0);
    int next_slack = n_, next_art = art_begin_;
    for (int i = 0; i < r; ++i) {
      const auto& row = lp.rows[i];
      bool flip = row.rhs < 0;
      flipped_[i] = flip;
      double sign = flip ? -1.0 : 1.0;
      for (auto [j, a] : row.coef) at(i, j) += sign * a;
      at(i, cols_) = sign * row.rhs;
      switch (effective_sense(row.sense, flip)) {
        case LinearProgram::Sense::kLe:
          at(i, next_slack) = 1;
          unit_col_[i] = next_slack;
          basis_[i] = next_slack++;
          break;
        case LinearProgram::Sense::kGe:
          at(i, next_slack++) = -1;
          at(i, next_art) = 1;
          unit_col_[i] = next_art;
          basis_[i] = next_art++;
          break;
        case LinearProgram::Sense::kEq:
          at(i, next_art) = 1;
          unit_col_[i] = next_art;
          basis_[i] = next_art++;
          break;
      }
    }
    obj_.assign(cols_ + 1, 0.0);
  }

  LpSolution solve(const std::vector<double>& cost) {
    LpSolution sol;
    // Phase 1.
    std::fill(obj_.begin(), obj_.end(), 0.0);
    for (int j = art_begin_; j < cols_; ++j) obj_[j] = 1;
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] >= art_begin_) add_row_to_obj(i, -1.0);
    double scale = 1.0;
    for (int i = 0; i < rows_; ++i) scale = std::max(scale, std::abs(at(i, cols_)));
    // The phase 1 objective is bounded below by zero.
    iterate(cols_, sol.pivots, 1e-10 * scale);
    if (-obj_[cols_] > 1e-7 * scale) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < art_begin_) continue;
      for (int j = 0; j < art_begin_; ++j) {
        if (std::abs(at(i, j)) > 1e-7) {
          pivot(i, j);
          ++sol.pivots;
          break;
        }
      }
    }
    // Phase 2.
    std::fill(obj_.begin(), obj_.end(), 0.0);
    for (int j = 0; j < n_; ++j) obj_[j] = cost[j];
    for (int i = 0; i < rows_; ++i) {
      int b = basis_[i];
      if (b < n_ && cost[b] != 0) add_row_to_obj(i, -cost[b]);
    }
    if (!iterate(art_begin_, sol.pivots, -std::numeric_limits<double>::infinity())) {
      sol.status = LpStatus::kUnbounded;
      return sol;
    }
    sol.status = LpStatus::kOptimal;
    sol.x.assign(n_, 0.0);
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] < n_) sol.x[basis_[i]] = std::max(0.0, at(i, cols_));
    sol.value = 0;
    for (int j = 0; j < n_; ++j) sol.value += cost[j] * sol.x[j];
    // The reduced cost of a unit column is -y_i (its phase 2 cost is 0).
    sol.duals.assign(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      double y = -obj_[unit_col_[i]];
      sol.duals[i] = flipped_[i] ? -y : y;
    }
    return sol;
  }

 private:
  static LinearProgram::Sense effective_sense(LinearProgram::Sense s, bool flip) {
    if (!flip) return s;
    if (s == LinearProgram::Sense::kLe) return LinearProgram::Sense::kGe;
    if (s == LinearProgram::Sense::kGe) return LinearProgram::Sense::kLe;
    return s;
  }

  double& at(int i, int j) { return t_[static_cast<size_t>(i) * (cols_ + 1) + j]; }
  double* row(int i) { return &t_[static_cast<size_t>(i) * (cols_ + 1)]; }

  void add_row_to_obj(int i, double f) {
    const double* r = row(i);
    for (int j = 0; j <= cols_; ++j) obj_[j] += f * r[j];
  }

  void pivot(int pr, int pc) {
    double* p = row(pr);
    const double inv = 1.0 / p[pc];
    nz_.clear();
    for (int j = 0; j <= cols_; ++j) {
      if (p[j] != 0) {
        p[j] *= inv;
        nz_.push_back(j);
      }
    }
    p[pc] = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      double* r = row(i);
      const double f = r[pc];
      if (f == 0) continue;
      for (int j : nz_) r[j] -= f * p[j];
      r[pc] = 0;
    }
    const double f = obj_[pc];
    if (f != 0) {
      for (int j : nz_) obj_[j] -= f * p[j];
      obj_[pc] = 0;
    }
    basis_[pr] = pc;
  }

  // Columns [0, limit) may enter. Stops once the objective value drops to
  // `floor`. Returns false when unbounded.
  bool iterate(int limit, int64_t& pivots, double floor) {
    int degenerate_run = 0;
    const int64_t max_pivots = 200LL * (rows_ + cols_) + 1000;
    for (int64_t iter = 0;; ++iter) {
      if (iter > max_pivots) {
        throw Error(ErrorCode::kInvalidArgument, "simplex pivot limit exceeded");
      }
      if (-obj_[cols_] <= floor) return true;
      const bool bland = degenerate_run > 50;
      int enter = -1;
      double best = -eps_;
      for (int j = 0; j < limit; ++j) {
        if (obj_[j] < best) {
          enter = j;
          if (bland) break;
          best = obj_[j];
        }
      }
      if (enter < 0) return true;
      // Ratio test; near-ties go to the larger pivot element, or to the
      // smaller basic index under Bland's rule.
      int leave = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        double a = at(i, enter);
        if (a <= kPivotTol) continue;
        double q = std::max(0.0, at(i, cols_)) / a;
        bool better = q < ratio - eps_;
        if (!better && q <= ratio + eps_ && leave >= 0) {
          better = bland ? basis_[i] < basis_[leave] : a > at(leave, enter);
        }
        if (better) {
          ratio = std::min(q, ratio);
          leave = i;
        }
      }
      if (leave < 0) return false;
      degenerate_run = ratio <= eps_ ? degenerate_run + 1 : 0;
      pivot(leave, enter);
      ++pivots;
    }
  }

  double eps_;
  int n_ = 0, rows_ = 0, cols_ = 0, art_begin_ = 0;
  std::vector<double> t_;
  std::vector<double> obj_;
  std::vector<int> basis_;
  std::vector<int> unit_col_;
  std::vector<char> flipped_;
  std::vector<int> nz_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double eps) {
  Tableau t(lp, eps);
  std::vector<double> cost = lp.objective;
  cost.resize(lp.num_vars, 0.0);
  return t.solve(cost);
}

ColumnLp::ColumnLp(std::vector<double> rhs, double eps)
    : eps_(eps), rows_(static_cast<int>(rhs.size())), rhs_(std::move(rhs)) {
  for (double b : rhs_) {
    if (b < 0) throw Error(ErrorCode::kInvalidArgument, "negative right-hand side");
  }
  t_.assign(rows_, std::vector<double>(rows_, 0.0));
  basis_.resize(rows_);
  for (int i = 0; i < rows_; ++i) {
    t_[i][i] = 1;
    basis_[i] = i;
  }
  obj_.assign(rows_, 0.0);
}

int ColumnLp::add_column(double cost,
                         const std::vector<std::pair<int, double>>& coef) {
  // The slack block of the tableau is the current basis inverse.
  double reduced = cost;
  for (auto [k, a] : coef) reduced += obj_[k] * a;
  for (int i = 0; i < rows_; ++i) {
    double v = 0;
    for (auto [k, a] : coef) v += t_[i][k] * a;
    t_[i].push_back(v);
  }
  obj_.push_back(reduced);
  cost_.push_back(cost);
  return num_columns() - 1;
}

void ColumnLp::set_cost(int col, double cost) {
  if (cost_[col] != cost) {
    cost_[col] = cost;
    dirty_ = true;
  }
}

void ColumnLp::refresh_objective() {
  const int cols = rows_ + num_columns();
  obj_.assign(cols, 0.0);
  for (int c = 0; c < num_columns(); ++c) obj_[rows_ + c] = cost_[c];
  obj_value_ = 0;
  for (int i = 0; i < rows_; ++i) {
    int b = basis_[i];
    double cb = b < rows_ ? 0.0 : cost_[b - rows_];
    if (cb == 0) continue;
    obj_value_ += cb * rhs_[i];
    for (int j = 0; j < cols; ++j) obj_[j] -= cb * t_[i][j];
  }
  dirty_ = false;
}

void ColumnLp::pivot(int pr, int pc) {
  std::vector<double>& p = t_[pr];
  const int cols = static_cast<int>(p.size());
  const double inv = 1.0 / p[pc];
  std::vector<int> nz;
  for (int j = 0; j < cols; ++j) {
    if (p[j] != 0) {
      p[j] *= inv;
      nz.push_back(j);
    }
  }
  p[pc] = 1.0;
  rhs_[pr] *= inv;
  for (int i = 0; i < rows_; ++i) {
    if (i == pr) continue;
    const double f = t_[i][pc];
    if (f == 0) continue;
    for (int j : nz) t_[i][j] -= f * p[j];
    t_[i][pc] = 0;
    rhs_[i] -= f * rhs_[pr];
  }
  const double f = obj_[pc];
  if (f != 0) {
    for (int j : nz) obj_[j] -= f * p[j];
    obj_[pc] = 0;
    obj_value_ += f * rhs_[pr];
  }
  basis_[pr] = pc;
  ++pivots_;
}

LpSolution ColumnLp::solve() {
  if (dirty_) refresh_objective();
  LpSolution sol;
  const int cols = rows_ + num_columns();
  int degenerate_run = 0;
  const int64_t max_pivots = 200LL * (rows_ + cols) + 1000;
  for (int64_t iter = 0;; ++iter) {
    if (iter > max_pivots) {
      throw Error(ErrorCode::kInvalidArgument, "simplex pivot limit exceeded");
    }
    const bool bland = degenerate_run > 50;
    int enter = -1;
    double best = -eps_;
    for (int j = 0; j < cols; ++j) {
      if (obj_[j] < best) {
        enter = j;
        if (bland) break;
        best = obj_[j];
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows_; ++i) {
      double a = t_[i][enter];
      if (a <= kPivotTol) continue;
      double q = std::max(0.0, rhs_[i]) / a;
      bool better = q < ratio - eps_;
      if (!better && q <= ratio + eps_ && leave >= 0) {
        better = bland ? basis_[i] < basis_[leave] : a > t_[leave][enter];
      }
      if (better) {
        ratio = std::min(q, ratio);
        leave = i;
      }
    }
    if (leave < 0) {
      sol.status = LpStatus::kUnbounded;
      sol.pivots = pivots_;
      return sol;
    }
    degenerate_run = ratio <= eps_ ? degenerate_run + 1 : 0;
    pivot(leave, enter);
  }
  sol.status = LpStatus::kOptimal;
  sol.x.assign(num_columns(), 0.0);
  for (int i = 0; i < rows_; ++i)
    if (basis_[i] >= rows_) sol.x[basis_[i] - rows_] = std::max(0.0, rhs_[i]);
  sol.value = 0;
  for (int c = 0; c < num_columns(); ++c) sol.value += cost_[c] * sol.x[c];
  sol.duals.resize(rows_);
  for (int i = 0; i < rows_; ++i) sol.duals[i] = -obj_[i];
  sol.pivots = pivots_;
  return sol;
}

}  // namespace tcspan

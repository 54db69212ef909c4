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

#ifndef TCSPAN_LP_HPP_
#define TCSPAN_LP_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace tcspan {

// Dense two-phase primal simplex for small linear programs:
//   minimize c.x  subject to  rows,  x >= 0.
struct LinearProgram {
  enum class Sense { kLe, kGe, kEq };
  struct Row {
    std::vector<std::pair<int, double>> coef;  // (variable, coefficient)
    Sense sense = Sense::kGe;
    double rhs = 0;
  };
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;

  int add_var(double cost) {
    objective.push_back(cost);
    return num_vars++;
  }
  void add_row(Row row) { rows.push_back(std::move(row)); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0;
  std::vector<double> x;
  // Row prices y with c - y A >= 0 on the columns and y.b = value.
  std::vector<double> duals;
  int64_t pivots = 0;
};

// Dantzig pricing, switching to Bland's rule after a run of degenerate
// pivots.
LpSolution solve_lp(const LinearProgram& lp, double eps = 1e-9);

// Warm-started simplex for  min c.x  s.t.  A x <= b, x >= 0  with b >= 0.
// The slack basis is feasible, so there is no phase 1; columns may be
// appended and costs changed between solves, and each solve continues from
// the previous basis.
class ColumnLp {
 public:
  explicit ColumnLp(std::vector<double> rhs, double eps = 1e-9);

  int add_column(double cost, const std::vector<std::pair<int, double>>& coef);
  void set_cost(int col, double cost);
  int num_columns() const { return static_cast<int>(cost_.size()); }
  // kOptimal or kUnbounded.
  LpSolution solve();

 private:
  void pivot(int pr, int pc);
  void refresh_objective();

  double eps_;
  int rows_;
  // Row-major tableau; column j < rows_ is the slack of row j, column
  // rows_ + c is structural column c. rhs_ holds the basic values.
  std::vector<std::vector<double>> t_;
  std::vector<double> rhs_;
  std::vector<double> obj_;  // reduced costs
  double obj_value_ = 0;     // c_B x_B
  std::vector<double> cost_;
  std::vector<int> basis_;
  bool dirty_ = false;
  int64_t pivots_ = 0;
};

}  // namespace tcspan

#endif  // TCSPAN_LP_HPP_

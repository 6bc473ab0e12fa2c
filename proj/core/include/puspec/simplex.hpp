// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

namespace puspec {

/// maximize c.x  subject to  A x = b,  lower <= x <= upper  (bounds finite).
struct LinearProgram {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

enum class LpStatus { optimal, infeasible, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
  int iterations = 0;
};

struct SimplexOptions {
  double tolerance = 1e-9;
  int max_iterations = 10000;
};

/// Dense two-phase primal simplex with bounded variables and Bland's rule.
/// Intended for small problems (tens of columns, a handful of rows).
LpResult solve_bounded_simplex(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace puspec

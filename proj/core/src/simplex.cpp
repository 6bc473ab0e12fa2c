// SPDX-License-Identifier: Apache-2.0

#include "puspec/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "puspec/error.hpp"

namespace puspec {

namespace {

enum class VarState { basic, at_lower, at_upper };

struct Tableau {
  Eigen::MatrixXd A;  // m x (n + m), artificial columns appended
  Eigen::VectorXd b;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  Eigen::VectorXd x;
  std::vector<VarState> state;
  std::vector<Eigen::Index> basis;  // row -> variable

  Eigen::MatrixXd basis_matrix() const {
    Eigen::MatrixXd B(A.rows(), A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) B.col(i) = A.col(basis[static_cast<std::size_t>(i)]);
    return B;
  }

  void refresh_basic_values(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu) {
    Eigen::VectorXd rhs = b;
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (state[static_cast<std::size_t>(j)] != VarState::basic) rhs -= A.col(j) * x[j];
    const Eigen::VectorXd xb = lu.solve(rhs);
    for (Eigen::Index i = 0; i < A.rows(); ++i) x[basis[static_cast<std::size_t>(i)]] = xb[i];
  }
};

// Runs primal simplex iterations for `cost` until optimal. Returns false when
// the iteration budget is exhausted.
bool iterate(Tableau& t, const Eigen::VectorXd& cost, const SimplexOptions& opt, int& iterations) {
  const double tol = opt.tolerance;
  const Eigen::Index m = t.A.rows();
  const Eigen::Index N = t.A.cols();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  while (iterations < opt.max_iterations) {
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(t.basis_matrix());
    Eigen::VectorXd cb(m);
    for (Eigen::Index i = 0; i < m; ++i) cb[i] = cost[t.basis[static_cast<std::size_t>(i)]];
    const Eigen::VectorXd y = lu.transpose().solve(cb);

    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < N; ++j) {
      const VarState s = t.state[static_cast<std::size_t>(j)];
      if (s == VarState::basic || !(t.upper[j] > t.lower[j])) continue;
      const double d = cost[j] - y.dot(t.A.col(j));
      if ((s == VarState::at_lower && d > tol) || (s == VarState::at_upper && d < -tol)) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return true;

    const Eigen::VectorXd alpha = lu.solve(t.A.col(entering));
    const double dir = t.state[static_cast<std::size_t>(entering)] == VarState::at_lower ? 1.0 : -1.0;

    double step = t.upper[entering] - t.lower[entering];
    Eigen::Index leave_row = -1;
    bool leave_to_upper = false;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double g = dir * alpha[i];
      const Eigen::Index var = t.basis[static_cast<std::size_t>(i)];
      double limit;
      bool to_upper;
      if (g > tol) {
        limit = (t.x[var] - t.lower[var]) / g;
        to_upper = false;
      } else if (g < -tol) {
        if (t.upper[var] == kInf) continue;
        limit = (t.upper[var] - t.x[var]) / (-g);
        to_upper = true;
      } else {
        continue;
      }
      limit = std::max(limit, 0.0);
      const bool better = limit < step - 1e-12;
      const bool tie_wins = limit <= step + 1e-12 && leave_row >= 0 &&
                            var < t.basis[static_cast<std::size_t>(leave_row)];
      if (better || tie_wins) {
        step = limit;
        leave_row = i;
        leave_to_upper = to_upper;
      }
    }
    if (step == kInf) fail(ErrorCode::infeasible, "linear program is unbounded");

    ++iterations;
    t.x[entering] += dir * step;
    if (leave_row < 0) {
      t.state[static_cast<std::size_t>(entering)] =
          dir > 0 ? VarState::at_upper : VarState::at_lower;
      t.x[entering] = dir > 0 ? t.upper[entering] : t.lower[entering];
    } else {
      const Eigen::Index leaving = t.basis[static_cast<std::size_t>(leave_row)];
      t.state[static_cast<std::size_t>(leaving)] =
          leave_to_upper ? VarState::at_upper : VarState::at_lower;
      t.x[leaving] = leave_to_upper ? t.upper[leaving] : t.lower[leaving];
      t.basis[static_cast<std::size_t>(leave_row)] = entering;
      t.state[static_cast<std::size_t>(entering)] = VarState::basic;
    }
    t.refresh_basic_values(Eigen::PartialPivLU<Eigen::MatrixXd>(t.basis_matrix()));
  }
  return false;
}

}  // namespace

LpResult solve_bounded_simplex(const LinearProgram& lp, const SimplexOptions& options) {
  const Eigen::Index m = lp.A.rows();
  const Eigen::Index n = lp.A.cols();
  if (lp.b.size() != m || lp.c.size() != n || lp.lower.size() != n || lp.upper.size() != n)
    fail(ErrorCode::length_mismatch, "linear program dimensions are inconsistent");
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!std::isfinite(lp.lower[j]) || !std::isfinite(lp.upper[j]) || lp.upper[j] < lp.lower[j])
      fail(ErrorCode::invalid_argument, "linear program bounds must be finite and ordered");
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  Tableau t;
  t.A = Eigen::MatrixXd::Zero(m, n + m);
  t.A.leftCols(n) = lp.A;
  t.b = lp.b;
  t.lower = Eigen::VectorXd::Zero(n + m);
  t.upper = Eigen::VectorXd::Constant(n + m, kInf);
  t.lower.head(n) = lp.lower;
  t.upper.head(n) = lp.upper;
  t.x = Eigen::VectorXd::Zero(n + m);
  t.x.head(n) = lp.lower;
  t.state.assign(static_cast<std::size_t>(n + m), VarState::at_lower);
  t.basis.resize(static_cast<std::size_t>(m));

  const Eigen::VectorXd residual = lp.b - lp.A * lp.lower;
  for (Eigen::Index i = 0; i < m; ++i) {
    t.A(i, n + i) = residual[i] < 0.0 ? -1.0 : 1.0;
    t.x[n + i] = std::abs(residual[i]);
    t.basis[static_cast<std::size_t>(i)] = n + i;
    t.state[static_cast<std::size_t>(n + i)] = VarState::basic;
  }

  LpResult result;
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setConstant(-1.0);
  if (!iterate(t, phase1, options, result.iterations)) {
    result.status = LpStatus::iteration_limit;
    return result;
  }
  const double infeasibility = t.x.tail(m).sum();
  if (infeasibility > options.tolerance * (1.0 + lp.b.lpNorm<Eigen::Infinity>())) {
    result.status = LpStatus::infeasible;
    return result;
  }

  // Pin artificials at zero; basic ones stay in the basis until pivoted out.
  for (Eigen::Index i = 0; i < m; ++i) {
    t.upper[n + i] = 0.0;
    t.x[n + i] = 0.0;
  }
  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
  phase2.head(n) = lp.c;
  if (!iterate(t, phase2, options, result.iterations)) {
    result.status = LpStatus::iteration_limit;
    return result;
  }

  result.status = LpStatus::optimal;
  result.x = t.x.head(n);
  for (Eigen::Index j = 0; j < n; ++j) result.x[j] = std::clamp(result.x[j], lp.lower[j], lp.upper[j]);
  result.objective = lp.c.dot(result.x);
  return result;
}

}  // namespace puspec

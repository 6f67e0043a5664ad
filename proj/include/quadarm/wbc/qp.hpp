#pragma once

#include <Eigen/Dense>

namespace quadarm::wbc {

using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class QpStatus { Optimal, MaxIterations, Infeasible };

struct QpSolution {
  VectorXd x;
  QpStatus status = QpStatus::Optimal;
  int iterations = 0;
};

/// Minimizes 1/2 x^T H x + g^T x subject to lower <= C x <= upper, H SPD.
///
/// Dual active-set method: starts from the unconstrained minimum and adds
/// violated constraints one at a time, dropping blocking ones along partial
/// dual steps. Infinite bounds are skipped. Iterations are capped at
/// 10 * (number of one-sided constraint rows); hitting the cap yields
/// QpStatus::MaxIterations with the current best iterate.
QpSolution solve_qp(const MatrixXd& hessian, const VectorXd& gradient,
                    const MatrixXd& constraints, const VectorXd& lower, const VectorXd& upper);

}  // namespace quadarm::wbc

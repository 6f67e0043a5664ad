#include "quadarm/wbc/qp.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>

namespace quadarm::wbc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Row {
  VectorXd normal;  // constraint normal a, for a^T x >= b
  double bound;     // b
};

}  // namespace

QpSolution solve_qp(const MatrixXd& hessian, const VectorXd& gradient,
                    const MatrixXd& constraints, const VectorXd& lower, const VectorXd& upper) {
  const int n = static_cast<int>(hessian.rows());
  if (hessian.cols() != n || gradient.size() != n) {
    throw std::invalid_argument("solve_qp: inconsistent objective dimensions");
  }
  if (constraints.rows() != lower.size() || constraints.rows() != upper.size() ||
      (constraints.rows() > 0 && constraints.cols() != n)) {
    throw std::invalid_argument("solve_qp: inconsistent constraint dimensions");
  }

  const Eigen::LLT<MatrixXd> llt(hessian);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("solve_qp: hessian is not positive definite");
  }

  // One-sided rows a^T x >= b.
  std::vector<Row> rows;
  for (int k = 0; k < constraints.rows(); ++k) {
    if (std::isfinite(upper[k])) rows.push_back({-constraints.row(k).transpose(), -upper[k]});
    if (std::isfinite(lower[k])) rows.push_back({constraints.row(k).transpose(), lower[k]});
  }
  const int m = static_cast<int>(rows.size());
  const int max_iterations = std::max(20, 10 * m);

  QpSolution sol;
  sol.x = llt.solve(-gradient);
  if (m == 0) return sol;

  std::vector<int> active;
  VectorXd lambda = VectorXd::Zero(m);

  auto directions = [&](const VectorXd& normal, VectorXd& z, VectorXd& r) {
    const VectorXd hinv_n = llt.solve(normal);
    const int k = static_cast<int>(active.size());
    if (k == 0) {
      z = hinv_n;
      r.resize(0);
      return;
    }
    MatrixXd n_active(n, k);
    for (int i = 0; i < k; ++i) n_active.col(i) = rows[active[i]].normal;
    const MatrixXd hinv_na = llt.solve(n_active);
    // r = (N^T H^-1 N)^-1 N^T H^-1 a;  z = H^-1 a - H^-1 N r
    const MatrixXd gram = n_active.transpose() * hinv_na;
    r = gram.ldlt().solve(n_active.transpose() * hinv_n);
    z = hinv_n - hinv_na * r;
  };

  while (sol.iterations < max_iterations) {
    // Most violated inactive constraint.
    int worst = -1;
    double worst_slack = -1e-10;
    for (int i = 0; i < m; ++i) {
      bool is_active = false;
      for (int a : active) is_active |= (a == i);
      if (is_active) continue;
      const double scale = 1.0 + std::abs(rows[i].bound);
      const double slack = (rows[i].normal.dot(sol.x) - rows[i].bound) / scale;
      if (slack < worst_slack) {
        worst_slack = slack;
        worst = i;
      }
    }
    if (worst < 0) return sol;  // all satisfied: KKT point

    double lambda_new = 0.0;
    while (sol.iterations < max_iterations) {
      ++sol.iterations;
      VectorXd z, r;
      directions(rows[worst].normal, z, r);

      // Blocking dual step among active constraints with r > 0.
      double t1 = kInf;
      int blocking = -1;
      for (int i = 0; i < static_cast<int>(active.size()); ++i) {
        if (r[i] > 1e-12) {
          const double t = lambda[active[i]] / r[i];
          if (t < t1) {
            t1 = t;
            blocking = i;
          }
        }
      }

      // Full primal step length.
      const double zn = z.dot(rows[worst].normal);
      const double slack = rows[worst].normal.dot(sol.x) - rows[worst].bound;
      const double t2 = zn > 1e-14 ? -slack / zn : kInf;

      if (!std::isfinite(t1) && !std::isfinite(t2)) {
        sol.status = QpStatus::Infeasible;
        return sol;
      }

      const double t = std::min(t1, t2);
      if (std::isfinite(t2)) sol.x += t * z;
      for (int i = 0; i < static_cast<int>(active.size()); ++i) lambda[active[i]] -= t * r[i];
      lambda_new += t;

      if (t == t2 && std::isfinite(t2)) {
        lambda[worst] = lambda_new;
        active.push_back(worst);
        break;  // constraint satisfied and active; pick the next violator
      }
      // Partial step: drop the blocking constraint and retry.
      lambda[active[blocking]] = 0.0;
      active.erase(active.begin() + blocking);
    }
  }

  sol.status = QpStatus::MaxIterations;
  return sol;
}

}  // namespace quadarm::wbc

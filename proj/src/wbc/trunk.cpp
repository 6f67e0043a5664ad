#include "quadarm/wbc/trunk.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace quadarm::wbc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Vec6 desired_base_wrench(const RobotState& state, const BaseReference& reference,
                         const TrunkGains& gains, const Vec6& coupling) {
  const Vector3d pos_err = reference.position - state.base_pose.translation;
  const Vector3d vel_err = reference.linear_velocity - state.base_twist.linear;
  const Vector3d rot_err = spatial::rotation_error(reference.orientation, state.base_pose.rotation);
  const Vector3d omega_err = reference.angular_velocity - state.base_twist.angular;

  Vec6 wrench;
  wrench.head<3>() = gains.kp_linear.asDiagonal() * pos_err +
                     gains.kd_linear.asDiagonal() * vel_err +
                     Vector3d(0.0, 0.0, gains.feedforward_mass * 9.81) + coupling.head<3>();
  wrench.tail<3>() = gains.kd_angular.asDiagonal() * omega_err +
                     gains.kp_angular.asDiagonal() * rot_err + coupling.tail<3>();
  return wrench;
}

ForceDistribution distribute_forces(const Vec6& desired_wrench, const ContactSet& contacts,
                                    const DistributionWeights& weights) {
  const int nc = static_cast<int>(contacts.contacts.size());
  if (nc < 1) throw std::invalid_argument("distribute_forces: need at least one stance foot");

  const int n = 3 * nc;
  MatrixXd map = MatrixXd::Zero(6, n);  // stacked [I; [p]x] blocks
  for (int c = 0; c < nc; ++c) {
    map.block<3, 3>(0, 3 * c) = Matrix3d::Identity();
    map.block<3, 3>(3, 3 * c) = spatial::skew(contacts.contacts[c].position_rel_base);
  }

  const MatrixXd weighted = weights.wrench.asDiagonal() * map;
  MatrixXd hessian = 2.0 * (map.transpose() * weighted +
                            weights.force_regularization * MatrixXd::Identity(n, n));
  const VectorXd gradient = -2.0 * (weighted.transpose() * desired_wrench);

  // Per contact: four pyramid facets (inscribed, mu/sqrt(2)) and the normal
  // force bounds.
  MatrixXd con = MatrixXd::Zero(5 * nc, n);
  VectorXd lower(5 * nc), upper(5 * nc);
  for (int c = 0; c < nc; ++c) {
    const Contact& contact = contacts.contacts[c];
    const Vector3d normal = contact.normal.normalized();
    Vector3d t1 = contacts.tangent_x - contacts.tangent_x.dot(normal) * normal;
    if (t1.norm() < 1e-9) t1 = contacts.tangent_y - contacts.tangent_y.dot(normal) * normal;
    t1.normalize();
    const Vector3d t2 = normal.cross(t1);
    const double mu = contact.friction / std::sqrt(2.0);

    const int r = 5 * c;
    con.block<1, 3>(r + 0, 3 * c) = (t1 - mu * normal).transpose();
    con.block<1, 3>(r + 1, 3 * c) = (-t1 - mu * normal).transpose();
    con.block<1, 3>(r + 2, 3 * c) = (t2 - mu * normal).transpose();
    con.block<1, 3>(r + 3, 3 * c) = (-t2 - mu * normal).transpose();
    lower.segment<4>(r).setConstant(-kInf);
    upper.segment<4>(r).setZero();
    con.block<1, 3>(r + 4, 3 * c) = normal.transpose();
    lower[r + 4] = contact.force_min;
    upper[r + 4] = std::max(contact.force_max, contact.force_min);
  }

  const QpSolution qp = solve_qp(hessian, gradient, con, lower, upper);

  ForceDistribution out;
  out.forces.resize(nc);
  if (qp.status == QpStatus::Optimal) {
    for (int c = 0; c < nc; ++c) out.forces[c] = qp.x.segment<3>(3 * c);
  } else {
    // Constrained best effort: share the support evenly along the normals.
    for (int c = 0; c < nc; ++c) {
      const Contact& contact = contacts.contacts[c];
      const double share =
          std::clamp(desired_wrench.z() / nc, contact.force_min, contact.force_max);
      out.forces[c] = share * contact.normal.normalized();
    }
  }

  VectorXd stacked(n);
  for (int c = 0; c < nc; ++c) stacked.segment<3>(3 * c) = out.forces[c];
  out.achieved_wrench = map * stacked;

  // The QP is always feasible (a zero-tangential solution exists inside the
  // bounds), so "infeasible" here means the commanded support itself could
  // not be produced: flag when the normal-direction wrench is missed.
  const double support_residual = std::abs(out.achieved_wrench.z() - desired_wrench.z());
  const bool support_met = support_residual <= 1e-6 * std::max(1.0, std::abs(desired_wrench.z()));
  out.status = (qp.status == QpStatus::Optimal && support_met)
                   ? DistributionStatus::Optimal
                   : DistributionStatus::ClampedInfeasible;
  return out;
}

std::vector<Vector3d> stance_leg_torques(const std::vector<Vector3d>& forces,
                                         const std::vector<Matrix3d>& foot_jacobians) {
  if (forces.size() != foot_jacobians.size()) {
    throw std::invalid_argument("stance_leg_torques: one Jacobian per stance force required");
  }
  std::vector<Vector3d> torques(forces.size());
  for (size_t i = 0; i < forces.size(); ++i) {
    torques[i] = -foot_jacobians[i].transpose() * forces[i];
  }
  return torques;
}

Vector3d leg_torques(const Vector3d& tau_feedforward, const Vector3d& q, const Vector3d& qd,
                     const Vector3d& q_desired, const Vector3d& qd_desired, const Vector3d& kp,
                     const Vector3d& kd) {
  if ((kp.array() < 0.0).any() || (kd.array() < 0.0).any()) {
    throw std::invalid_argument("leg_torques: gains must be nonnegative");
  }
  return tau_feedforward + kp.asDiagonal() * (q_desired - q) + kd.asDiagonal() * (qd_desired - qd);
}

}  // namespace quadarm::wbc

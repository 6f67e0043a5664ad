#pragma once

#include "quadarm/spatial/kinematics.hpp"
#include "quadarm/spatial/model.hpp"

namespace quadarm::dyn {

using spatial::KinematicModel;
using spatial::Matrix3d;
using spatial::Pose;
using spatial::Twist;
using spatial::Vec6;
using spatial::Vector3d;
using Eigen::MatrixXd;
using Eigen::VectorXd;

inline const Vector3d kGravity{0.0, 0.0, -9.81};

/// Joint-space inertia of the arm sub-chain (composite rigid body algorithm).
/// Symmetric positive definite.
MatrixXd arm_inertia(const KinematicModel& model, const VectorXd& q_arm);

/// Gravity + Coriolis + centrifugal torques. `gravity` is expressed in the
/// arm mount frame (equals world when the base is level).
VectorXd arm_bias(const KinematicModel& model, const VectorXd& q_arm, const VectorXd& qd_arm,
                  const Vector3d& gravity = kGravity);

/// Recursive Newton-Euler inverse dynamics: torque producing `qdd_arm` under
/// an external force `force_ee` (mount frame) at the end-effector.
VectorXd arm_inverse_dynamics(const KinematicModel& model, const VectorXd& q_arm,
                              const VectorXd& qd_arm, const VectorXd& qdd_arm,
                              const Vector3d& gravity = kGravity,
                              const Vector3d& force_ee = Vector3d::Zero());

/// qdd = M^-1 (tau + J_e^T [F_e; 0] - h).
VectorXd arm_forward_dynamics(const KinematicModel& model, const VectorXd& q_arm,
                              const VectorXd& qd_arm, const VectorXd& tau_arm,
                              const Vector3d& force_ee = Vector3d::Zero(),
                              const Vector3d& gravity = kGravity);

/// Net reaction wrench the arm exerts on the base while moving with
/// (q, qd, qdd), expressed at the base origin with world-aligned axes.
Vec6 arm_coupling_wrench(const KinematicModel& model, const VectorXd& q_arm,
                         const VectorXd& qd_arm, const VectorXd& qdd_arm,
                         const Pose& base_pose);

struct ArmDynamicsResult {
  MatrixXd inertia;
  VectorXd bias;
  Vec6 coupling_wrench_on_base;
};

ArmDynamicsResult arm_dynamics(const KinematicModel& model, const VectorXd& q_arm,
                               const VectorXd& qd_arm, const VectorXd& qdd_arm,
                               const Pose& base_pose);

/// Coupled base + arm dynamics for the plant, legs massless. Both are in
/// base coordinates: the first six generalized velocities are the base twist
/// expressed in the base frame, the last seven the arm joint rates.
/// M udot + h = generalized forces.
struct FloatingDynamics {
  Eigen::Matrix<double, 13, 13> inertia;
  Eigen::Matrix<double, 13, 1> bias;
};

FloatingDynamics floating_dynamics(const KinematicModel& model, const Pose& base_pose,
                                   const Twist& base_twist_world, const VectorXd& q_arm,
                                   const VectorXd& qd_arm,
                                   const Vector3d& gravity_world = kGravity);

}  // namespace quadarm::dyn

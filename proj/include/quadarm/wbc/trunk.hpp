#pragma once

#include <vector>

#include "quadarm/spatial/kinematics.hpp"
#include "quadarm/wbc/qp.hpp"

namespace quadarm::wbc {

using spatial::Matrix3d;
using spatial::Pose;
using spatial::RobotState;
using spatial::Vec6;
using spatial::Vector3d;

/// Desired base pose and twist, world frame.
struct BaseReference {
  Vector3d position = Vector3d::Zero();
  Matrix3d orientation = Matrix3d::Identity();
  Vector3d linear_velocity = Vector3d::Zero();
  Vector3d angular_velocity = Vector3d::Zero();
};

/// Diagonal trunk gains plus the mass used for the gravity feedforward.
struct TrunkGains {
  Vector3d kp_linear = Vector3d::Constant(700.0);    // N/m
  Vector3d kd_linear = Vector3d::Constant(120.0);    // N s/m
  Vector3d kp_angular = Vector3d::Constant(60.0);    // N m/rad
  Vector3d kd_angular = Vector3d::Constant(6.0);     // N m s/rad
  double feedforward_mass = 0.0;                     // kg
};

struct Contact {
  int leg = 0;                            // 0..3, LF RF LH RH
  Vector3d position_rel_base = Vector3d::Zero();  // world-aligned, from base origin
  double friction = 0.7;
  Vector3d normal = Vector3d::UnitZ();
  double force_min = 0.0;   // N, along the normal
  double force_max = 500.0;
};

struct ContactSet {
  std::vector<Contact> contacts;
  // Tangent directions of the linearized cone facets; heading x/y by default.
  Vector3d tangent_x = Vector3d::UnitX();
  Vector3d tangent_y = Vector3d::UnitY();
};

enum class DistributionStatus { Optimal, ClampedInfeasible };

struct ForceDistribution {
  std::vector<Vector3d> forces;  // one per contact, world frame
  Vec6 achieved_wrench = Vec6::Zero();
  DistributionStatus status = DistributionStatus::Optimal;
};

struct DistributionWeights {
  Vec6 wrench = (Vec6() << 1.0, 1.0, 1.0, 10.0, 10.0, 10.0).finished();
  double force_regularization = 1e-4;
};

/// Desired base wrench: linear PD + gravity feedforward, angular PD on the
/// axis-angle rotation error, plus the caller-supplied compensation wrench.
/// World frame, moments about the base origin.
Vec6 desired_base_wrench(const RobotState& state, const BaseReference& reference,
                         const TrunkGains& gains, const Vec6& coupling = Vec6::Zero());

/// Maps a desired base wrench to per-foot ground reaction forces through a
/// QP with linearized friction-cone and normal-force bound constraints.
/// Never fails: when the commanded support cannot be met within the bounds
/// the status reports ClampedInfeasible and the forces are the constrained
/// best effort.
ForceDistribution distribute_forces(const Vec6& desired_wrench, const ContactSet& contacts,
                                    const DistributionWeights& weights = {});

/// Feedforward stance torques, tau = -J^T F, one 3-vector per stance leg.
std::vector<Vector3d> stance_leg_torques(const std::vector<Vector3d>& forces,
                                         const std::vector<Matrix3d>& foot_jacobians);

/// Total leg torque: feedforward plus joint-space PD.
Vector3d leg_torques(const Vector3d& tau_feedforward, const Vector3d& q, const Vector3d& qd,
                     const Vector3d& q_desired, const Vector3d& qd_desired,
                     const Vector3d& kp, const Vector3d& kd);

}  // namespace quadarm::wbc

#pragma once

#include "quadarm/dynamics/arm_dynamics.hpp"
#include "quadarm/spatial/kinematics.hpp"

namespace quadarm::arm {

using spatial::KinematicModel;
using spatial::Matrix3d;
using spatial::Pose;
using spatial::Vector3d;
using Eigen::MatrixXd;
using Eigen::Vector4d;
using Eigen::VectorXd;
using Matrix64 = Eigen::Matrix<double, 6, 4>;
using Matrix63 = Eigen::Matrix<double, 6, 3>;
using Matrix67 = Eigen::Matrix<double, 6, 7>;

/// Impedance gains for the two kinematic groups. Cartesian gains act on
/// horizontal-frame errors; wrist joint gains act in joint space.
struct ArmGains {
  Vector3d shelbow_kp = Vector3d::Constant(50.0);        // N/m
  Vector3d shelbow_kd = Vector3d::Constant(5.0);         // N s/m
  Vector3d wrist_cartesian_kp = Vector3d::Constant(60.0);
  Vector3d wrist_cartesian_kd = Vector3d::Constant(4.0);
  Vector3d wrist_joint_kp = Vector3d::Constant(100.0);   // N m/rad
  Vector3d wrist_joint_kd = Vector3d::Constant(5.0);     // N m s/rad
};

enum class WristControl { CartesianTracking, VisualJointImpedance };

/// Setpoints for the wrist group; only the active mode's fields are used.
struct WristMode {
  WristControl mode = WristControl::CartesianTracking;
  Vector3d q_desired = Vector3d::Zero();
  Vector3d qd_desired = Vector3d::Zero();
  Vector3d ee_position_desired = Vector3d::Zero();  // horizontal frame
  Vector3d ee_velocity_desired = Vector3d::Zero();
};

/// Column partition of the 6x7 arm Jacobian into the first four (Shelbow)
/// and last three (wrist) columns.
std::pair<Matrix64, Matrix63> split_jacobian(const Matrix67& arm_jacobian);

/// Cartesian impedance on the wrist point through the Shelbow joints,
/// rendered in the horizontal frame: tau = J^T R_h [Kp e + Kd edot] + h_sh.
/// Jacobian and gravity terms are world-frame; positions/velocities are
/// horizontal-frame coordinates.
Vector4d shelbow_torques(const Matrix64& wrist_jacobian, const Vector3d& wrist_position,
                         const Vector3d& wrist_velocity, const Vector3d& position_desired,
                         const Vector3d& velocity_desired, const ArmGains& gains,
                         const Vector4d& bias_shelbow, const Matrix3d& horizontal_rotation);

/// Cartesian tracking of the EE position through the wrist joints.
Vector3d wrist_cartesian_torques(const Matrix63& ee_jacobian, const Vector3d& ee_position,
                                 const Vector3d& ee_velocity, const Vector3d& position_desired,
                                 const Vector3d& velocity_desired, const ArmGains& gains,
                                 const Vector3d& bias_wrist,
                                 const Matrix3d& horizontal_rotation);

/// Joint impedance for the wrist group (visual-servo mode).
Vector3d wrist_joint_torques(const Vector3d& q_wrist, const Vector3d& qd_wrist,
                             const Vector3d& q_desired, const Vector3d& qd_desired,
                             const ArmGains& gains, const Vector3d& bias_wrist);

/// Partition of the arm bias torques into Shelbow and wrist components.
std::pair<Vector4d, Vector3d> arm_gravity_split(const KinematicModel& model,
                                                const VectorXd& q_arm, const VectorXd& qd_arm,
                                                const Vector3d& gravity = dyn::kGravity);

/// Integrates wrist joint velocity references into position setpoints
/// (trapezoidal, vision period), clamping |q_desired - q| to 0.5 rad so a
/// stalled vision stream cannot wind the setpoint away from the arm.
class WristSetpointIntegrator {
 public:
  void reset(const Vector3d& q_wrist);
  void update(const Vector3d& qd_reference, const Vector3d& q_wrist, double dt);
  const Vector3d& q_desired() const { return q_desired_; }
  const Vector3d& qd_desired() const { return qd_desired_; }

 private:
  Vector3d q_desired_ = Vector3d::Zero();
  Vector3d qd_desired_ = Vector3d::Zero();
  Vector3d last_rate_ = Vector3d::Zero();
};

}  // namespace quadarm::arm

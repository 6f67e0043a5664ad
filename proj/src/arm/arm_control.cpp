#include "quadarm/arm/arm_control.hpp"

namespace quadarm::arm {

std::pair<Matrix64, Matrix63> split_jacobian(const Matrix67& arm_jacobian) {
  return {arm_jacobian.leftCols<4>(), arm_jacobian.rightCols<3>()};
}

namespace {

// Cartesian force from a horizontal-frame PD, mapped to joint torques
// through the linear rows of a world-frame Jacobian. Commanded moments are
// zero; only the force rows act.
template <int N>
Eigen::Matrix<double, N, 1> impedance_torques(
    const Eigen::Matrix<double, 6, N>& jacobian, const Vector3d& position,
    const Vector3d& velocity, const Vector3d& position_desired,
    const Vector3d& velocity_desired, const Vector3d& kp, const Vector3d& kd,
    const Matrix3d& horizontal_rotation) {
  const Vector3d force_h = kp.asDiagonal() * (position_desired - position) +
                           kd.asDiagonal() * (velocity_desired - velocity);
  const Vector3d force_world = horizontal_rotation * force_h;
  return jacobian.template topRows<3>().transpose() * force_world;
}

}  // namespace

Vector4d shelbow_torques(const Matrix64& wrist_jacobian, const Vector3d& wrist_position,
                         const Vector3d& wrist_velocity, const Vector3d& position_desired,
                         const Vector3d& velocity_desired, const ArmGains& gains,
                         const Vector4d& bias_shelbow, const Matrix3d& horizontal_rotation) {
  return impedance_torques<4>(wrist_jacobian, wrist_position, wrist_velocity, position_desired,
                              velocity_desired, gains.shelbow_kp, gains.shelbow_kd,
                              horizontal_rotation) +
         bias_shelbow;
}

Vector3d wrist_cartesian_torques(const Matrix63& ee_jacobian, const Vector3d& ee_position,
                                 const Vector3d& ee_velocity, const Vector3d& position_desired,
                                 const Vector3d& velocity_desired, const ArmGains& gains,
                                 const Vector3d& bias_wrist,
                                 const Matrix3d& horizontal_rotation) {
  return impedance_torques<3>(ee_jacobian, ee_position, ee_velocity, position_desired,
                              velocity_desired, gains.wrist_cartesian_kp,
                              gains.wrist_cartesian_kd, horizontal_rotation) +
         bias_wrist;
}

Vector3d wrist_joint_torques(const Vector3d& q_wrist, const Vector3d& qd_wrist,
                             const Vector3d& q_desired, const Vector3d& qd_desired,
                             const ArmGains& gains, const Vector3d& bias_wrist) {
  return gains.wrist_joint_kp.asDiagonal() * (q_desired - q_wrist) +
         gains.wrist_joint_kd.asDiagonal() * (qd_desired - qd_wrist) + bias_wrist;
}

std::pair<Vector4d, Vector3d> arm_gravity_split(const KinematicModel& model,
                                                const VectorXd& q_arm, const VectorXd& qd_arm,
                                                const Vector3d& gravity) {
  const VectorXd bias = dyn::arm_bias(model, q_arm, qd_arm, gravity);
  return {bias.head<4>(), bias.tail<3>()};
}

void WristSetpointIntegrator::reset(const Vector3d& q_wrist) {
  q_desired_ = q_wrist;
  qd_desired_.setZero();
  last_rate_.setZero();
}

void WristSetpointIntegrator::update(const Vector3d& qd_reference, const Vector3d& q_wrist,
                                     double dt) {
  q_desired_ += 0.5 * dt * (last_rate_ + qd_reference);
  last_rate_ = qd_reference;
  qd_desired_ = qd_reference;
  const Vector3d error = q_desired_ - q_wrist;
  for (int i = 0; i < 3; ++i) {
    q_desired_[i] = q_wrist[i] + std::clamp(error[i], -0.5, 0.5);
  }
}

}  // namespace quadarm::arm

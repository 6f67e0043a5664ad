#pragma once

#include "quadarm/spatial/model.hpp"

namespace quadarm::spatial {

using Eigen::MatrixXd;

/// World pose of `frame`, following the tree from the floating base.
Pose forward_kinematics(const KinematicModel& model, const RobotState& state, int frame);
Pose forward_kinematics(const KinematicModel& model, const RobotState& state,
                        const std::string& frame);

/// World poses of every link in one pass.
std::vector<Pose> forward_kinematics_all(const KinematicModel& model, const RobotState& state);

/// 6 x n world-frame geometric Jacobian of `frame` with respect to the
/// actuated joints strictly between `base_of_chain` and `frame`, ordered from
/// the chain base outward. Rows 1-3 are linear, rows 4-6 angular.
/// Throws if `frame` is not downstream of `base_of_chain`.
MatrixXd geometric_jacobian(const KinematicModel& model, const RobotState& state, int frame,
                            int base_of_chain);

/// Jacobian columns restricted to one leg's three joints, rows 1-3 only.
Matrix3d foot_position_jacobian(const KinematicModel& model, const RobotState& state, int leg);

/// Frame at the base origin whose xy plane is horizontal and whose x axis is
/// the base heading (unit projection of the base x axis onto the horizontal
/// plane). Throws std::domain_error when the base x axis is within 1e-6 rad
/// of vertical.
Pose horizontal_frame(const Pose& base_pose);

/// Axis-angle of the relative rotation R_desired * R_actual^T, expressed in
/// the frame both matrices are written in. Zero iff the rotations match.
Vector3d rotation_error(const Matrix3d& rotation_desired, const Matrix3d& rotation_actual);

}  // namespace quadarm::spatial

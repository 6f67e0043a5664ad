#pragma once

#include "quadarm/spatial/twist.hpp"
#include "quadarm/vision/camera.hpp"

namespace quadarm::vision {

using spatial::Twist;
using spatial::Vec6;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Matrix26 = Eigen::Matrix<double, 2, 6>;
using Matrix16 = Eigen::Matrix<double, 1, 6>;
using Matrix36 = Eigen::Matrix<double, 3, 6>;

/// Stacked IBVS error: projection-plane offsets plus the camera-roll
/// feature, the (z, x) element of the camera-to-base rotation.
struct FeatureError {
  Vector3d e = Vector3d::Zero();  // (x, y, roll feature)
  bool valid = false;
};

/// Interaction matrix of a projection-plane point at depth Z: feature rate
/// per unit camera twist (camera frame, [linear; angular]).
/// Throws std::domain_error for Z <= 0.
Matrix26 point_interaction_matrix(double x, double y, double depth);

/// Interaction row of the roll feature (R_cb)_zx. `cam_to_base` has the
/// camera axes as columns, expressed in base coordinates.
Matrix16 roll_interaction_row(const Matrix3d& cam_to_base);

/// Rotation with the camera axes as columns in base coordinates; its (z, x)
/// element is the roll feature.
Matrix3d camera_to_base_rotation(const Matrix3d& base_rotation_world,
                                 const Matrix3d& camera_rotation_world);

/// Stacks the detection center and roll feature against the zero target.
/// Throws std::runtime_error when the detection is invalid.
FeatureError feature_error(const Detection& detection, const Matrix3d& cam_to_base);

/// Stacked 3x6 interaction matrix for (x, y, roll) at the detection depth.
Matrix36 stacked_interaction_matrix(const FeatureError& error, double depth,
                                    const Matrix3d& cam_to_base);

/// Camera twist (camera frame) imposing exponential error decay at rate
/// `gain`: xi = -gain * pinv(L) * e. Truncated-SVD pseudo-inverse.
Twist camera_twist(const FeatureError& error, const Matrix36& interaction, double gain);

/// Wrist joint velocities reproducing a camera twist: the twist is rotated
/// into the Jacobian's frame by `camera_rotation` (camera axes as columns in
/// that frame), then mapped through the pseudo-inverse of the wrist Jacobian.
Vector3d wrist_velocity_reference(const Twist& camera_twist_camera_frame,
                                  const Eigen::Matrix<double, 6, 3>& wrist_jacobian,
                                  const Matrix3d& camera_rotation);

/// Moore-Penrose pseudo-inverse with singular values below `cutoff` dropped.
MatrixXd pseudo_inverse(const MatrixXd& matrix, double cutoff = 1e-6);

}  // namespace quadarm::vision

#include "quadarm/vision/servo.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace quadarm::vision {

Matrix26 point_interaction_matrix(double x, double y, double depth) {
  if (depth <= 0.0) throw std::domain_error("point_interaction_matrix: invalid depth");
  Matrix26 l;
  l << -1.0 / depth, 0.0, x / depth, x * y, -(1.0 + x * x), y,
       0.0, -1.0 / depth, y / depth, 1.0 + y * y, -x * y, -x;
  return l;
}

Matrix16 roll_interaction_row(const Matrix3d& cam_to_base) {
  Matrix16 row;
  row << 0.0, 0.0, 0.0, 0.0, -cam_to_base(2, 2), cam_to_base(2, 1);
  return row;
}

Matrix3d camera_to_base_rotation(const Matrix3d& base_rotation_world,
                                 const Matrix3d& camera_rotation_world) {
  return base_rotation_world.transpose() * camera_rotation_world;
}

FeatureError feature_error(const Detection& detection, const Matrix3d& cam_to_base) {
  if (!detection.valid) throw std::runtime_error("feature_error: no valid target");
  FeatureError err;
  err.e = Vector3d(detection.x, detection.y, cam_to_base(2, 0));
  err.valid = true;
  return err;
}

Matrix36 stacked_interaction_matrix(const FeatureError& error, double depth,
                                    const Matrix3d& cam_to_base) {
  Matrix36 l;
  l.topRows<2>() = point_interaction_matrix(error.e.x(), error.e.y(), depth);
  l.bottomRows<1>() = roll_interaction_row(cam_to_base);
  return l;
}

Twist camera_twist(const FeatureError& error, const Matrix36& interaction, double gain) {
  if (gain <= 0.0) throw std::invalid_argument("camera_twist: gain must be positive");
  const Vec6 xi = -gain * (pseudo_inverse(interaction) * error.e);
  return Twist::from_stacked(xi);
}

Vector3d wrist_velocity_reference(const Twist& camera_twist_camera_frame,
                                  const Eigen::Matrix<double, 6, 3>& wrist_jacobian,
                                  const Matrix3d& camera_rotation) {
  Vec6 twist_out;
  twist_out.head<3>() = camera_rotation * camera_twist_camera_frame.linear;
  twist_out.tail<3>() = camera_rotation * camera_twist_camera_frame.angular;
  return pseudo_inverse(wrist_jacobian) * twist_out;
}

MatrixXd pseudo_inverse(const MatrixXd& matrix, double cutoff) {
  Eigen::JacobiSVD<MatrixXd> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  VectorXd inv = svd.singularValues();
  for (int i = 0; i < inv.size(); ++i) {
    inv[i] = inv[i] > cutoff ? 1.0 / inv[i] : 0.0;
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

}  // namespace quadarm::vision

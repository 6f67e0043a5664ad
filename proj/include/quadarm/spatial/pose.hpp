#pragma once

#include <Eigen/Dense>

namespace quadarm::spatial {

using Eigen::Matrix3d;
using Eigen::Vector3d;

/// Skew-symmetric matrix such that skew(a)*b == a.cross(b).
inline Matrix3d skew(const Vector3d& v) {
  Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

/// Inverse of skew() applied to the antisymmetric part of m.
inline Vector3d unskew(const Matrix3d& m) {
  return 0.5 * Vector3d(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
}

/// Rodrigues formula, exp([w]x). Safe at w = 0.
Matrix3d rotation_exp(const Vector3d& w);

/// Axis*angle of a rotation matrix, |angle| <= pi.
Vector3d rotation_log(const Matrix3d& rotation);

/// Rigid transform: x_parent = rotation * x_local + translation.
struct Pose {
  Matrix3d rotation = Matrix3d::Identity();
  Vector3d translation = Vector3d::Zero();

  static Pose Identity() { return {}; }

  Pose operator*(const Pose& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }

  Pose inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }

  Vector3d apply(const Vector3d& point) const { return rotation * point + translation; }

  bool is_approx(const Pose& other, double tol = 1e-9) const {
    return rotation.isApprox(other.rotation, tol) &&
           (translation - other.translation).norm() <= tol;
  }
};

/// Rotation about a principal axis.
Matrix3d rot_x(double angle);
Matrix3d rot_y(double angle);
Matrix3d rot_z(double angle);

/// Intrinsic z-y-x Euler composition (yaw, pitch, roll).
Matrix3d rpy_to_rotation(double roll, double pitch, double yaw);

/// Inverse of rpy_to_rotation; pitch in (-pi/2, pi/2) away from gimbal lock.
Vector3d rotation_to_rpy(const Matrix3d& rotation);

}  // namespace quadarm::spatial

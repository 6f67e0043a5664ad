#include "quadarm/spatial/pose.hpp"

#include <cmath>

namespace quadarm::spatial {

Matrix3d rotation_exp(const Vector3d& w) {
  const double angle = w.norm();
  if (angle < 1e-12) {
    // Second-order series keeps the result orthonormal to machine precision.
    const Matrix3d s = skew(w);
    return Matrix3d::Identity() + s + 0.5 * s * s;
  }
  const Vector3d axis = w / angle;
  const Matrix3d s = skew(axis);
  return Matrix3d::Identity() + std::sin(angle) * s + (1.0 - std::cos(angle)) * s * s;
}

Vector3d rotation_log(const Matrix3d& rotation) {
  const double cos_angle = std::clamp(0.5 * (rotation.trace() - 1.0), -1.0, 1.0);
  const double angle = std::acos(cos_angle);
  if (angle < 1e-9) {
    return unskew(rotation);  // first-order: R ~ I + [w]x
  }
  if (angle > M_PI - 1e-6) {
    // Near pi the off-diagonal formula degenerates; recover the axis from
    // the symmetric part R + I = 2(axis axis^T - ...) diagonal dominant term.
    Vector3d axis;
    const Matrix3d sym = 0.5 * (rotation + Matrix3d::Identity());
    int k;
    sym.diagonal().maxCoeff(&k);
    axis = sym.col(k) / std::sqrt(sym(k, k));
    axis.normalize();
    // Fix the sign using the antisymmetric part when it is not exactly zero.
    const Vector3d v = unskew(rotation);
    if (v.dot(axis) < 0.0) axis = -axis;
    return angle * axis;
  }
  return angle / (2.0 * std::sin(angle)) *
         Vector3d(rotation(2, 1) - rotation(1, 2), rotation(0, 2) - rotation(2, 0),
                  rotation(1, 0) - rotation(0, 1));
}

Matrix3d rot_x(double angle) {
  return rotation_exp(Vector3d::UnitX() * angle);
}

Matrix3d rot_y(double angle) {
  return rotation_exp(Vector3d::UnitY() * angle);
}

Matrix3d rot_z(double angle) {
  return rotation_exp(Vector3d::UnitZ() * angle);
}

Matrix3d rpy_to_rotation(double roll, double pitch, double yaw) {
  return rot_z(yaw) * rot_y(pitch) * rot_x(roll);
}

Vector3d rotation_to_rpy(const Matrix3d& r) {
  const double pitch = std::asin(std::clamp(-r(2, 0), -1.0, 1.0));
  const double roll = std::atan2(r(2, 1), r(2, 2));
  const double yaw = std::atan2(r(1, 0), r(0, 0));
  return {roll, pitch, yaw};
}

}  // namespace quadarm::spatial

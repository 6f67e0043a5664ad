#pragma once

#include "quadarm/spatial/pose.hpp"

namespace quadarm::spatial {

using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Rigid-body velocity: linear velocity of the frame origin plus angular
/// velocity, both in the same coordinate frame.
struct Twist {
  Vector3d linear = Vector3d::Zero();
  Vector3d angular = Vector3d::Zero();

  Vec6 stacked() const {
    Vec6 v;
    v << linear, angular;
    return v;
  }

  static Twist from_stacked(const Vec6& v) { return {v.head<3>(), v.tail<3>()}; }

  /// Adjoint map: twist of the same body re-expressed in the parent frame of
  /// `pose`, with the reference point moved to the parent origin.
  Twist transformed_by(const Pose& pose) const {
    const Vector3d w = pose.rotation * angular;
    return {pose.rotation * linear + pose.translation.cross(w), w};
  }
};

}  // namespace quadarm::spatial

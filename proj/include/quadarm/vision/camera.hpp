#pragma once

#include "quadarm/spatial/pose.hpp"

namespace quadarm::vision {

using spatial::Matrix3d;
using spatial::Pose;
using spatial::Vector3d;

/// Pinhole camera working in projection-plane units (x = X/Z at unit focal
/// length). The optical axis is the camera z axis.
struct CameraModel {
  double focal = 1.0;
  double half_extent_x = 0.95;  // projection-plane units
  double half_extent_y = 0.55;
  Pose pose_in_ee;  // camera frame relative to the EE frame
  double min_depth = 0.15;  // m
  double max_depth = 8.0;
  double min_projected_radius = 0.002;
};

struct Projection {
  double x = 0.0;
  double y = 0.0;
  double depth = 0.0;
};

/// Projects a camera-frame point. Throws std::domain_error when the point is
/// at or behind the camera plane.
Projection project(const Vector3d& point_camera);

/// Simulated detection of a spherical target: bounding-box center in the
/// projection plane, half size, and measured depth.
struct Detection {
  double x = 0.0;
  double y = 0.0;
  double half_width = 0.0;
  double half_height = 0.0;
  double depth = 0.0;
  bool valid = false;
};

/// Stand-in for a color-segmentation detector: valid iff the projected
/// center lies inside the image extents, the depth is within range, and the
/// apparent radius is resolvable. `depth_noise` perturbs the reported depth
/// only (the bounding box stays geometric).
Detection detect(const Vector3d& object_center_world, double object_radius,
                 const Pose& camera_pose_world, const CameraModel& model,
                 double depth_noise = 0.0);

}  // namespace quadarm::vision

#include "quadarm/vision/camera.hpp"

#include <stdexcept>

namespace quadarm::vision {

Projection project(const Vector3d& point_camera) {
  if (point_camera.z() <= 0.0) {
    throw std::domain_error("project: point is behind the camera");
  }
  return {point_camera.x() / point_camera.z(), point_camera.y() / point_camera.z(),
          point_camera.z()};
}

Detection detect(const Vector3d& object_center_world, double object_radius,
                 const Pose& camera_pose_world, const CameraModel& model, double depth_noise) {
  Detection det;
  const Vector3d in_camera = camera_pose_world.inverse().apply(object_center_world);
  if (in_camera.z() <= 0.0) return det;  // behind the camera: not an error

  const Projection p = project(in_camera);
  const double apparent_radius = object_radius / p.depth;
  det.x = p.x;
  det.y = p.y;
  det.half_width = apparent_radius;
  det.half_height = apparent_radius;
  det.depth = p.depth + depth_noise;
  det.valid = std::abs(p.x) <= model.half_extent_x && std::abs(p.y) <= model.half_extent_y &&
              p.depth >= model.min_depth && p.depth <= model.max_depth &&
              apparent_radius >= model.min_projected_radius && det.depth > 0.0;
  return det;
}

}  // namespace quadarm::vision

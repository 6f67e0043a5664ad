#include "quadarm/sag/sag.hpp"

#include <cmath>
#include <stdexcept>

namespace quadarm::sag {

namespace {

Vector3d circle_point(const Vector3d& center, double radius, double height, double azimuth) {
  return center + Vector3d(radius * std::cos(azimuth), radius * std::sin(azimuth), height);
}

Vector3d circle_tangent(double radius, double azimuth, double rate) {
  return Vector3d(-radius * std::sin(azimuth), radius * std::cos(azimuth), 0.0) * rate;
}

}  // namespace

PositionReference search_wrist_reference(double t, const SearchParams& params, Side side) {
  if (t < 0.0) throw std::invalid_argument("search_wrist_reference: negative time");
  const double limit = side == Side::Left ? params.limit_a : params.limit_b;
  const double rate = side == Side::Left ? params.angular_speed : -params.angular_speed;
  double azimuth = rate * t;
  bool saturated = false;
  if (side == Side::Left && azimuth >= limit) {
    azimuth = limit;
    saturated = true;
  } else if (side == Side::Right && azimuth <= limit) {
    azimuth = limit;
    saturated = true;
  }
  PositionReference ref;
  ref.position = circle_point(params.mount_offset, params.radius, params.height, azimuth);
  ref.velocity = saturated ? Vector3d::Zero() : circle_tangent(params.radius, azimuth, rate);
  return ref;
}

double search_ee_azimuth(double t, const SearchParams& params, Side side) {
  const double sign = side == Side::Left ? 1.0 : -1.0;
  const double start = M_PI - params.scan_half_angle;
  const double span = 2.0 * params.scan_half_angle;
  const double swept = std::min(params.scan_speed * std::max(t, 0.0), span);
  return sign * (start + swept);
}

PositionReference search_ee_reference(double t, const Vector3d& wrist_anchor,
                                      const SearchParams& params, Side side) {
  const double sign = side == Side::Left ? 1.0 : -1.0;
  const double azimuth = search_ee_azimuth(t, params, side);
  const double span = 2.0 * params.scan_half_angle;
  const bool saturated = params.scan_speed * std::max(t, 0.0) >= span;

  PositionReference ref;
  ref.position = circle_point(wrist_anchor, params.ee_radius, params.ee_height, azimuth);
  ref.velocity = saturated ? Vector3d::Zero()
                           : circle_tangent(params.ee_radius, azimuth, sign * params.scan_speed);
  return ref;
}

Vector3d approach_wrist_target(const Vector3d& direction, const SearchParams& params) {
  const double horizontal = std::hypot(direction.x(), direction.y());
  if (horizontal < 1e-9) {
    throw std::invalid_argument("approach_wrist_target: direction has no horizontal component");
  }
  const double azimuth =
      std::clamp(std::atan2(direction.y(), direction.x()), params.limit_b, params.limit_a);
  return circle_point(params.mount_offset, params.radius, params.height, azimuth);
}

double approach_heading_rate(double bearing_error, double gain, double max_rate,
                             double deadband) {
  if (std::abs(bearing_error) < deadband) return 0.0;
  return std::clamp(gain * bearing_error, -max_rate, max_rate);
}

double grasp_pitch(double z_shoulder_object, double x_shoulder_object) {
  if (x_shoulder_object <= 0.05) {
    throw std::domain_error("grasp_pitch: object too close to the shoulder");
  }
  return std::atan(z_shoulder_object / x_shoulder_object);
}

double BaseRotateScan::advance(double dt) {
  if (done()) return 0.0;
  accumulated_ += rate_ * dt;
  return rate_;
}

}  // namespace quadarm::sag

#pragma once

#include <optional>

#include "quadarm/arm/arm_control.hpp"
#include "quadarm/spatial/pose.hpp"

namespace quadarm::sag {

using spatial::Matrix3d;
using spatial::Pose;
using spatial::Vector3d;

/// Geometry of the search trajectories. The wrist sweeps a horizontal circle
/// whose center sits on the arm-base vertical axis; the EE scans horizontal
/// circles around the parked wrist. Angles are azimuths in the horizontal
/// frame, zero forward, positive left.
struct SearchParams {
  double radius = 0.1736;          // m, wrist circle radius
  double height = -0.136;          // m, circle plane relative to the arm mount
  double angular_speed = 0.5;      // rad/s, wrist azimuth sweep rate
  double limit_a = 110.0 * M_PI / 180.0;   // left wrist limit (point A)
  double limit_b = -110.0 * M_PI / 180.0;  // right wrist limit (point B)
  double scan_half_angle = M_PI / 2.0;     // EE scan cone half-angle about the rear
  double scan_speed = 0.7;         // rad/s, EE scan rate
  double ee_radius = 0.1007;       // m, EE orbit radius about the wrist
  double ee_height = -0.0539;      // m, EE plane relative to the wrist
  Vector3d mount_offset{0.10, 0.0, 0.08};  // arm base in the horizontal frame
  double max_wrist_reach = 0.408;  // m, in-plane reach used for the margin check
  double base_rotate_rate = 0.4;   // rad/s, 180-degree relocation turn
};

enum class Side { Left, Right };

struct PositionReference {
  Vector3d position = Vector3d::Zero();
  Vector3d velocity = Vector3d::Zero();
};

/// Wrist setpoint on the search circle at sweep time t: constant-rate
/// azimuth sweep from forward toward limit A (left) or B (right), held at
/// the limit afterwards. Horizontal-frame coordinates.
PositionReference search_wrist_reference(double t, const SearchParams& params, Side side);

/// EE setpoint orbiting a parked wrist, scanning the rear sector
/// [pi - half_angle, pi + half_angle] (mirrored on the right side) at
/// constant rate; roll and pitch of the EE direction stay fixed.
PositionReference search_ee_reference(double t, const Vector3d& wrist_anchor,
                                      const SearchParams& params, Side side);

/// Azimuth of the EE scan direction at sweep time t (same sweep law as
/// search_ee_reference).
double search_ee_azimuth(double t, const SearchParams& params, Side side);

/// Wrist target for the approach: the intersection of the search circle
/// with the bearing toward the object, clamped to the allowed arc [B, A].
/// `direction` is the object direction in the horizontal frame; throws
/// std::invalid_argument when it has no horizontal component.
Vector3d approach_wrist_target(const Vector3d& direction, const SearchParams& params);

/// Saturated P-law on the heading error with a stop deadband.
double approach_heading_rate(double bearing_error, double gain, double max_rate,
                             double deadband = 0.02);

/// Base pitch that points the shoulder-object line along the arm's reach,
/// Eq.-of-motion inputs are the object position relative to the shoulder
/// along the base x and z axes. Throws std::domain_error when the object is
/// within 0.05 m longitudinally (too close to lean toward).
double grasp_pitch(double z_shoulder_object, double x_shoulder_object);

/// Accumulates a constant-rate 180-degree relocation turn.
class BaseRotateScan {
 public:
  explicit BaseRotateScan(double yaw_rate = 0.4) : rate_(yaw_rate) {}
  /// Yaw rate to command during dt; zero once half a turn has accumulated.
  double advance(double dt);
  bool done() const { return accumulated_ >= M_PI; }
  void reset() { accumulated_ = 0.0; }
  double accumulated() const { return accumulated_; }

 private:
  double rate_;
  double accumulated_ = 0.0;
};

}  // namespace quadarm::sag

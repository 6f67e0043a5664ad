#pragma once

#include "quadarm/sag/sag.hpp"

namespace quadarm::sag {

enum class SagPhase {
  SearchArmSweep,
  SearchBackwardLeft,
  SearchBackwardRight,
  SearchBaseRotate,
  ApproachAlignWrist,
  ApproachAlignBase,
  ApproachWalk,
  GraspPosition,
  GraspPitch,
  GraspReach,
  GraspClose,
  Done,
};

const char* to_string(SagPhase phase);

struct SagConfig {
  SearchParams search;
  // Approach
  double stop_distance = 0.7;     // m, base-to-object halt distance
  double approach_gain = 1.0;     // 1/s on the remaining distance
  double forward_speed = 0.25;    // m/s cap
  double heading_gain = 1.2;
  double yaw_rate_limit = 0.4;    // rad/s
  double align_deadband = 0.02;   // rad
  // Grasp
  double workspace_fraction = 0.85;
  double max_ee_reach = 0.58;     // m from the shoulder
  double longitudinal_rate = 0.1; // m/s wrist pull-back ramp
  double wrist_hold_x = 0.14;     // m, reduced longitudinal wrist offset
  double grasp_walk_speed = 0.12; // m/s final walk-in
  double close_distance = 0.03;   // m, EE-to-object distance firing the gripper
  double reach_timeout = 6.0;     // s before an unreachable verdict
  Vector3d wrist_to_ee_offset{0.1007, 0.0, -0.0539};  // heading frame
  double min_wrist_height = -0.22;  // m relative to the base origin
  double max_wrist_height = 0.26;
};

/// Per-tick state fed to the controller, world quantities unless noted.
struct SagInputs {
  double dt = 0.02;
  Pose base_pose;
  Pose horizontal;  // current horizontal frame
  Vector3d wrist_world = Vector3d::Zero();
  Vector3d ee_world = Vector3d::Zero();
  Vector3d shoulder_world = Vector3d::Zero();
  bool detection_valid = false;
  bool has_estimate = false;
  Vector3d object_estimate_world = Vector3d::Zero();
  double camera_yaw = 0.0;  // world yaw of the optical axis
};

/// Reference snapshot produced by one tick.
struct SagReferences {
  SagPhase phase = SagPhase::SearchArmSweep;
  PositionReference wrist;  // horizontal frame
  PositionReference ee;     // horizontal frame, Cartesian wrist mode only
  arm::WristControl wrist_mode = arm::WristControl::CartesianTracking;
  bool vision_active = false;  // run the visual-servo integrator
  double yaw_rate = 0.0;
  double forward_speed = 0.0;
  double pitch = 0.0;   // desired base pitch, lean toward the object
  bool stand = false;   // halt the gait
  bool gripper_close = false;
  bool search_restart_event = false;
  bool unreachable_grasp = false;
};

/// Search-Approach-Grasp phase machine. The behavior tree ticks exactly one
/// branch per cycle; phase state survives branch switches so a detection
/// loss resumes the search from the last waypoint.
class SagController {
 public:
  explicit SagController(SagConfig config);

  SagReferences tick_search(const SagInputs& in);
  SagReferences tick_approach(const SagInputs& in);

  /// Open-loop grasp in progress: keeps the approach branch active while
  /// the camera is too close for detection.
  bool grasp_latched() const { return grasp_latched_; }
  bool gripper_closed() const { return gripper_closed_; }
  SagPhase phase() const { return phase_; }

 private:
  struct ObjectView {
    Vector3d in_horizontal = Vector3d::Zero();
    double bearing = 0.0;
    double horizontal_distance = 0.0;
    double x_so = 0.0;  // longitudinal shoulder-object, base frame
    double z_so = 0.0;
  };
  ObjectView object_view(const SagInputs& in) const;
  void arm_search_references(SagReferences& out) const;
  PositionReference wrist_on_circle(double azimuth) const;
  void move_azimuth_toward(double target, double dt);

  SagConfig cfg_;
  SagPhase phase_ = SagPhase::SearchArmSweep;
  Side side_ = Side::Left;
  double sweep_azimuth_ = 0.0;
  double sweep_target_;
  double scan_time_ = 0.0;
  BaseRotateScan rotate_;
  bool grasp_latched_ = false;
  bool gripper_closed_ = false;
  Vector3d grasp_target_world_ = Vector3d::Zero();
  double grasp_wrist_x_ = 0.0;  // longitudinal ramp state
  double pitch_command_ = 0.0;
  double reach_elapsed_ = 0.0;
  bool standing_ = false;
};

}  // namespace quadarm::sag

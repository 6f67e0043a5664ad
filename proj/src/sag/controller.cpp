#include "quadarm/sag/controller.hpp"

#include <cmath>

namespace quadarm::sag {

namespace {

double wrap_angle(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a < -M_PI) a += 2.0 * M_PI;
  return a;
}

}  // namespace

const char* to_string(SagPhase phase) {
  switch (phase) {
    case SagPhase::SearchArmSweep: return "search-arm-sweep";
    case SagPhase::SearchBackwardLeft: return "search-backward-left";
    case SagPhase::SearchBackwardRight: return "search-backward-right";
    case SagPhase::SearchBaseRotate: return "search-base-rotate";
    case SagPhase::ApproachAlignWrist: return "approach-align-wrist";
    case SagPhase::ApproachAlignBase: return "approach-align-base";
    case SagPhase::ApproachWalk: return "approach-walk";
    case SagPhase::GraspPosition: return "grasp-position";
    case SagPhase::GraspPitch: return "grasp-pitch";
    case SagPhase::GraspReach: return "grasp-reach";
    case SagPhase::GraspClose: return "grasp-close";
    case SagPhase::Done: return "done";
  }
  return "?";
}

SagController::SagController(SagConfig config)
    : cfg_(std::move(config)),
      sweep_target_(cfg_.search.limit_a),
      rotate_(cfg_.search.base_rotate_rate) {}

PositionReference SagController::wrist_on_circle(double azimuth) const {
  PositionReference ref;
  ref.position = cfg_.search.mount_offset +
                 Vector3d(cfg_.search.radius * std::cos(azimuth),
                          cfg_.search.radius * std::sin(azimuth), cfg_.search.height);
  return ref;
}

void SagController::move_azimuth_toward(double target, double dt) {
  const double step = cfg_.search.angular_speed * dt;
  const double delta = target - sweep_azimuth_;
  sweep_azimuth_ += std::clamp(delta, -step, step);
}

void SagController::arm_search_references(SagReferences& out) const {
  out.wrist = wrist_on_circle(sweep_azimuth_);
  // Camera scans radially outward along the sweep.
  double ee_azimuth = sweep_azimuth_;
  if (phase_ == SagPhase::SearchBackwardLeft || phase_ == SagPhase::SearchBackwardRight) {
    ee_azimuth = search_ee_azimuth(scan_time_, cfg_.search, side_);
  }
  out.ee.position = out.wrist.position + Vector3d(cfg_.search.ee_radius * std::cos(ee_azimuth),
                                                  cfg_.search.ee_radius * std::sin(ee_azimuth),
                                                  cfg_.search.ee_height);
  out.wrist_mode = arm::WristControl::CartesianTracking;
  out.vision_active = false;
}

SagReferences SagController::tick_search(const SagInputs& in) {
  // Re-entry from a lost detection resumes at the stored sweep waypoint.
  if (phase_ != SagPhase::SearchArmSweep && phase_ != SagPhase::SearchBackwardLeft &&
      phase_ != SagPhase::SearchBackwardRight && phase_ != SagPhase::SearchBaseRotate) {
    phase_ = SagPhase::SearchArmSweep;
    sweep_target_ = side_ == Side::Left ? cfg_.search.limit_a : cfg_.search.limit_b;
    standing_ = false;
  }

  SagReferences out;
  switch (phase_) {
    case SagPhase::SearchArmSweep: {
      move_azimuth_toward(sweep_target_, in.dt);
      if (std::abs(sweep_azimuth_ - sweep_target_) < 1e-9) {
        scan_time_ = 0.0;
        phase_ = side_ == Side::Left ? SagPhase::SearchBackwardLeft
                                     : SagPhase::SearchBackwardRight;
      }
      break;
    }
    case SagPhase::SearchBackwardLeft:
    case SagPhase::SearchBackwardRight: {
      scan_time_ += in.dt;
      const double span = 2.0 * cfg_.search.scan_half_angle;
      if (cfg_.search.scan_speed * scan_time_ >= span) {
        if (side_ == Side::Left) {
          side_ = Side::Right;
          sweep_target_ = cfg_.search.limit_b;
          phase_ = SagPhase::SearchArmSweep;
        } else {
          rotate_.reset();
          phase_ = SagPhase::SearchBaseRotate;
        }
      }
      break;
    }
    case SagPhase::SearchBaseRotate: {
      move_azimuth_toward(0.0, in.dt);  // arm back to the home azimuth
      out.yaw_rate = rotate_.advance(in.dt);
      if (rotate_.done()) {
        side_ = Side::Left;
        sweep_target_ = cfg_.search.limit_a;
        phase_ = SagPhase::SearchArmSweep;
        out.search_restart_event = true;
      }
      break;
    }
    default:
      break;
  }

  arm_search_references(out);
  out.phase = phase_;
  out.stand = standing_;
  return out;
}

SagController::ObjectView SagController::object_view(const SagInputs& in) const {
  ObjectView view;
  view.in_horizontal = in.horizontal.inverse().apply(in.object_estimate_world);
  view.bearing = std::atan2(view.in_horizontal.y(), view.in_horizontal.x());
  view.horizontal_distance = std::hypot(view.in_horizontal.x(), view.in_horizontal.y());
  const Vector3d rel_shoulder =
      in.base_pose.rotation.transpose() * (in.object_estimate_world - in.shoulder_world);
  view.x_so = rel_shoulder.x();
  view.z_so = rel_shoulder.z();
  return view;
}

SagReferences SagController::tick_approach(const SagInputs& in) {
  SagReferences out;
  if (phase_ == SagPhase::SearchArmSweep || phase_ == SagPhase::SearchBackwardLeft ||
      phase_ == SagPhase::SearchBackwardRight || phase_ == SagPhase::SearchBaseRotate) {
    phase_ = SagPhase::ApproachAlignWrist;
  }

  const ObjectView obj = object_view(in);
  const double base_yaw = spatial::rotation_to_rpy(in.base_pose.rotation).z();

  switch (phase_) {
    case SagPhase::ApproachAlignWrist: {
      const double target =
          std::clamp(obj.bearing, cfg_.search.limit_b, cfg_.search.limit_a);
      move_azimuth_toward(target, in.dt);
      out.wrist = wrist_on_circle(sweep_azimuth_);
      if (std::abs(sweep_azimuth_ - target) < 0.03) phase_ = SagPhase::ApproachAlignBase;
      break;
    }
    case SagPhase::ApproachAlignBase: {
      const double target =
          std::clamp(obj.bearing, cfg_.search.limit_b, cfg_.search.limit_a);
      move_azimuth_toward(target, in.dt);
      out.wrist = wrist_on_circle(sweep_azimuth_);
      out.yaw_rate = approach_heading_rate(obj.bearing, cfg_.heading_gain,
                                           cfg_.yaw_rate_limit, cfg_.align_deadband);
      if (std::abs(obj.bearing) < cfg_.align_deadband) phase_ = SagPhase::ApproachWalk;
      break;
    }
    case SagPhase::ApproachWalk: {
      // Heading follows the camera axis; walk until the halt distance.
      move_azimuth_toward(std::clamp(obj.bearing, cfg_.search.limit_b, cfg_.search.limit_a),
                          in.dt);
      out.wrist = wrist_on_circle(sweep_azimuth_);
      const double heading_error = wrap_angle(in.camera_yaw - base_yaw);
      out.yaw_rate = approach_heading_rate(heading_error, cfg_.heading_gain,
                                           cfg_.yaw_rate_limit, 0.005);
      const double remaining = obj.horizontal_distance - cfg_.stop_distance;
      out.forward_speed = std::clamp(cfg_.approach_gain * remaining, 0.0, cfg_.forward_speed);
      if (remaining < 0.01) {
        phase_ = SagPhase::GraspPosition;
        grasp_wrist_x_ = cfg_.search.mount_offset.x() + cfg_.search.radius;
      }
      break;
    }
    case SagPhase::GraspPosition: {
      // Wrist at the object height, longitudinal offset ramped down; the
      // base walks the object into the arm workspace.
      grasp_wrist_x_ = std::max(grasp_wrist_x_ - cfg_.longitudinal_rate * in.dt,
                                cfg_.search.mount_offset.x() + cfg_.wrist_hold_x);
      const double wrist_z = std::clamp(obj.in_horizontal.z(), cfg_.min_wrist_height,
                                        cfg_.max_wrist_height);
      out.wrist.position = Vector3d(grasp_wrist_x_, 0.0, wrist_z);
      const double heading_error = wrap_angle(in.camera_yaw - base_yaw);
      out.yaw_rate = approach_heading_rate(heading_error, cfg_.heading_gain,
                                           cfg_.yaw_rate_limit, 0.005);
      const double reach = (in.object_estimate_world - in.shoulder_world).norm();
      if (reach <= cfg_.workspace_fraction * cfg_.max_ee_reach && obj.x_so > 0.1) {
        phase_ = SagPhase::GraspPitch;
        pitch_command_ = -grasp_pitch(obj.z_so, obj.x_so);  // lean toward the object
        standing_ = true;
      } else {
        out.forward_speed = cfg_.grasp_walk_speed;
      }
      break;
    }
    case SagPhase::GraspPitch: {
      out.wrist.position =
          Vector3d(grasp_wrist_x_, 0.0,
                   std::clamp(obj.in_horizontal.z(), cfg_.min_wrist_height,
                              cfg_.max_wrist_height));
      out.pitch = pitch_command_;
      const double pitch_now = spatial::rotation_to_rpy(in.base_pose.rotation).y();
      if (std::abs(pitch_now - pitch_command_) < 0.04) {
        const double reach = (in.object_estimate_world - in.shoulder_world).norm();
        if (reach > 0.98 * cfg_.max_ee_reach) {
          out.unreachable_grasp = true;
          phase_ = SagPhase::ApproachWalk;
          standing_ = false;
          break;
        }
        grasp_target_world_ = in.object_estimate_world;
        grasp_latched_ = true;
        reach_elapsed_ = 0.0;
        phase_ = SagPhase::GraspReach;
      }
      break;
    }
    case SagPhase::GraspReach: {
      // Open loop: vision stays off regardless of detections.
      out.pitch = pitch_command_;
      const Vector3d target_h = in.horizontal.inverse().apply(grasp_target_world_);
      out.ee.position = target_h;
      out.wrist.position = target_h - cfg_.wrist_to_ee_offset;
      out.wrist_mode = arm::WristControl::CartesianTracking;
      reach_elapsed_ += in.dt;
      if ((in.ee_world - grasp_target_world_).norm() <= cfg_.close_distance) {
        gripper_closed_ = true;
        phase_ = SagPhase::GraspClose;
      } else if (reach_elapsed_ > cfg_.reach_timeout) {
        out.unreachable_grasp = true;
        grasp_latched_ = false;
        phase_ = SagPhase::ApproachWalk;
        standing_ = false;
      }
      break;
    }
    case SagPhase::GraspClose: {
      // Gripper closed: restore the trunk pitch, then park the arm.
      out.pitch = 0.0;
      const Vector3d target_h = in.horizontal.inverse().apply(grasp_target_world_);
      out.ee.position = target_h;
      out.wrist.position = target_h - cfg_.wrist_to_ee_offset;
      out.wrist_mode = arm::WristControl::CartesianTracking;
      const double pitch_now = spatial::rotation_to_rpy(in.base_pose.rotation).y();
      if (std::abs(pitch_now) < 0.05) phase_ = SagPhase::Done;
      break;
    }
    case SagPhase::Done: {
      sweep_azimuth_ = 0.0;
      arm_search_references(out);  // default posture = search home
      break;
    }
    default:
      break;
  }

  // Wrist group mode: visual joint impedance everywhere in the approach
  // except the open-loop reach and the parked end state.
  if (phase_ != SagPhase::GraspReach && phase_ != SagPhase::GraspClose &&
      phase_ != SagPhase::Done) {
    out.wrist_mode = arm::WristControl::VisualJointImpedance;
    out.vision_active = true;
  }
  out.phase = phase_;
  out.stand = standing_;
  out.gripper_close = gripper_closed_;
  return out;
}

}  // namespace quadarm::sag

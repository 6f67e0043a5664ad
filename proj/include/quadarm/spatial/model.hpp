#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "quadarm/spatial/pose.hpp"
#include "quadarm/spatial/twist.hpp"

namespace quadarm::spatial {

using Eigen::VectorXd;

enum class JointType { Fixed, Rotational, Prismatic };

/// Mass properties of one link, expressed in the link's own frame.
struct LinkInertia {
  double mass = 0.0;
  Vector3d com = Vector3d::Zero();
  Matrix3d rotational = Matrix3d::Zero();  // about the CoM
};

struct Link {
  std::string name;
  int parent = -1;  // index into KinematicModel::links, -1 for the root
  Pose origin;      // fixed transform from the parent frame to this joint frame
  JointType joint = JointType::Fixed;
  Vector3d axis = Vector3d::UnitZ();  // in this link's frame
  LinkInertia inertia;
  int joint_index = -1;  // position in the stacked joint vector, -1 if fixed
};

/// Well-known frames every model must name.
struct NamedFrames {
  int base = -1;
  int shoulder = -1;  // arm mount
  int wrist = -1;     // WR
  int camera = -1;    // C
  int ee = -1;        // EE
  int forearm = -1;   // disturbance application point on the arm
  std::array<int, 4> feet = {-1, -1, -1, -1};  // LF, RF, LH, RH
};

inline constexpr int kLegCount = 4;
inline constexpr int kLegJointCount = 3;
inline constexpr int kArmJointCount = 7;
inline constexpr std::array<const char*, 4> kLegNames = {"LF", "RF", "LH", "RH"};

/// Tree of links and joints for the base + 4 legs + 7-DoF arm.
///
/// Joint indices are assigned in link order: 12 leg joints first (LF, RF,
/// LH, RH, three each), then the 7 arm joints.
class KinematicModel {
 public:
  std::string name;
  std::vector<Link> links;
  NamedFrames frames;
  std::array<std::array<int, kLegJointCount>, kLegCount> leg_joint_links{};
  std::array<int, kArmJointCount> arm_joint_links{};
  VectorXd arm_home = VectorXd::Zero(kArmJointCount);

  int joint_count() const { return joint_count_; }

  int frame(const std::string& frame_name) const;  // throws on unknown name
  bool has_frame(const std::string& frame_name) const;

  /// Total mass of the arm sub-chain (links distal to the shoulder).
  double arm_mass() const;
  double base_mass() const { return links.front().inertia.mass; }

  /// Validates tree structure, assigns joint indices and named groups.
  /// Throws std::invalid_argument on malformed input.
  void finalize();

 private:
  std::unordered_map<std::string, int> frame_index_;
  int joint_count_ = 0;
};

/// Generalized state of the robot. Base twist is world-frame, linear part at
/// the base origin. Leg joints are ordered LF, RF, LH, RH.
struct RobotState {
  Pose base_pose;
  Twist base_twist;
  VectorXd q_legs = VectorXd::Zero(kLegCount * kLegJointCount);
  VectorXd qd_legs = VectorXd::Zero(kLegCount * kLegJointCount);
  VectorXd q_arm = VectorXd::Zero(kArmJointCount);
  VectorXd qd_arm = VectorXd::Zero(kArmJointCount);
  std::array<bool, kLegCount> contact = {true, true, true, true};

  double joint_position(int joint_index) const {
    const int n_leg = kLegCount * kLegJointCount;
    return joint_index < n_leg ? q_legs[joint_index] : q_arm[joint_index - n_leg];
  }
  double joint_velocity(int joint_index) const {
    const int n_leg = kLegCount * kLegJointCount;
    return joint_index < n_leg ? qd_legs[joint_index] : qd_arm[joint_index - n_leg];
  }
};

}  // namespace quadarm::spatial

#include "quadarm/spatial/kinematics.hpp"

#include <stdexcept>

namespace quadarm::spatial {

namespace {

Pose joint_motion(const Link& link, double q) {
  switch (link.joint) {
    case JointType::Rotational:
      return {rotation_exp(link.axis * q), Vector3d::Zero()};
    case JointType::Prismatic:
      return {Matrix3d::Identity(), link.axis * q};
    case JointType::Fixed:
      return Pose::Identity();
  }
  return Pose::Identity();
}

Pose link_local_pose(const KinematicModel& model, const RobotState& state, int index) {
  const Link& link = model.links[index];
  if (link.joint == JointType::Fixed) return link.origin;
  return link.origin * joint_motion(link, state.joint_position(link.joint_index));
}

}  // namespace

Pose forward_kinematics(const KinematicModel& model, const RobotState& state, int frame) {
  if (frame < 0 || frame >= static_cast<int>(model.links.size())) {
    throw std::invalid_argument("unknown frame index");
  }
  Pose pose = Pose::Identity();
  for (int i = frame; i > 0; i = model.links[i].parent) {
    pose = link_local_pose(model, state, i) * pose;
  }
  return state.base_pose * pose;
}

Pose forward_kinematics(const KinematicModel& model, const RobotState& state,
                        const std::string& frame) {
  return forward_kinematics(model, state, model.frame(frame));
}

std::vector<Pose> forward_kinematics_all(const KinematicModel& model, const RobotState& state) {
  std::vector<Pose> poses(model.links.size());
  poses[0] = state.base_pose;
  for (int i = 1; i < static_cast<int>(model.links.size()); ++i) {
    poses[i] = poses[model.links[i].parent] * link_local_pose(model, state, i);
  }
  return poses;
}

MatrixXd geometric_jacobian(const KinematicModel& model, const RobotState& state, int frame,
                            int base_of_chain) {
  if (frame < 0 || frame >= static_cast<int>(model.links.size()) || base_of_chain < 0 ||
      base_of_chain >= static_cast<int>(model.links.size())) {
    throw std::invalid_argument("unknown frame index");
  }

  // Actuated links on the path base_of_chain -> frame, chain base first.
  std::vector<int> chain;
  bool downstream = frame == base_of_chain;
  for (int i = frame; i > 0 && !downstream; i = model.links[i].parent) {
    if (model.links[i].parent == base_of_chain) downstream = true;
    if (model.links[i].joint != JointType::Fixed) chain.push_back(i);
  }
  if (!downstream && base_of_chain != 0) {
    throw std::invalid_argument("frame is not downstream of the chain base");
  }

  const auto poses = forward_kinematics_all(model, state);
  const Vector3d tip = poses[frame].translation;

  MatrixXd jac = MatrixXd::Zero(6, static_cast<int>(chain.size()));
  for (int c = 0; c < static_cast<int>(chain.size()); ++c) {
    const int link_idx = chain[chain.size() - 1 - c];
    const Link& link = model.links[link_idx];
    const Vector3d axis_world = poses[link_idx].rotation * link.axis;
    if (link.joint == JointType::Rotational) {
      jac.block<3, 1>(0, c) = axis_world.cross(tip - poses[link_idx].translation);
      jac.block<3, 1>(3, c) = axis_world;
    } else {
      jac.block<3, 1>(0, c) = axis_world;
    }
  }
  return jac;
}

Matrix3d foot_position_jacobian(const KinematicModel& model, const RobotState& state, int leg) {
  const int hip = model.leg_joint_links[leg][0];
  const MatrixXd jac =
      geometric_jacobian(model, state, model.frames.feet[leg], model.links[hip].parent);
  return jac.topRows<3>();
}

Pose horizontal_frame(const Pose& base_pose) {
  const Vector3d x_base = base_pose.rotation.col(0);
  Vector3d x_flat(x_base.x(), x_base.y(), 0.0);
  const double norm = x_flat.norm();
  if (norm < 1e-6) {
    throw std::domain_error("degenerate orientation: base x axis is vertical");
  }
  x_flat /= norm;
  Matrix3d rot;
  rot.col(0) = x_flat;
  rot.col(2) = Vector3d::UnitZ();
  rot.col(1) = Vector3d::UnitZ().cross(x_flat);
  return {rot, base_pose.translation};
}

Vector3d rotation_error(const Matrix3d& rotation_desired, const Matrix3d& rotation_actual) {
  return rotation_log(rotation_desired * rotation_actual.transpose());
}

}  // namespace quadarm::spatial

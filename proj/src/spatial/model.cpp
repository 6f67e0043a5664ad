#include "quadarm/spatial/model.hpp"

#include <stdexcept>

namespace quadarm::spatial {

int KinematicModel::frame(const std::string& frame_name) const {
  auto it = frame_index_.find(frame_name);
  if (it == frame_index_.end()) {
    throw std::invalid_argument("unknown frame: " + frame_name);
  }
  return it->second;
}

bool KinematicModel::has_frame(const std::string& frame_name) const {
  return frame_index_.count(frame_name) > 0;
}

double KinematicModel::arm_mass() const {
  // Sum over links whose ancestor path passes through the shoulder frame.
  double total = 0.0;
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    for (int a = i; a >= 0; a = links[a].parent) {
      if (a == frames.shoulder && i != frames.shoulder) {
        total += links[i].inertia.mass;
        break;
      }
    }
  }
  return total;
}

void KinematicModel::finalize() {
  if (links.empty()) throw std::invalid_argument("model has no links");
  if (links.front().parent != -1) throw std::invalid_argument("first link must be the root");

  frame_index_.clear();
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    const Link& link = links[i];
    if (i > 0 && (link.parent < 0 || link.parent >= i)) {
      throw std::invalid_argument("link '" + link.name +
                                  "' parent must precede it (tree order)");
    }
    if (frame_index_.count(link.name)) {
      throw std::invalid_argument("duplicate link name: " + link.name);
    }
    frame_index_[link.name] = i;
    if (link.joint != JointType::Fixed && std::abs(link.axis.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("joint axis of '" + link.name + "' must be unit length");
    }
  }

  joint_count_ = 0;
  for (auto& link : links) {
    link.joint_index = link.joint == JointType::Fixed ? -1 : joint_count_++;
  }

  auto resolve = [&](const char* n) { return frame(n); };
  frames.base = 0;
  frames.shoulder = resolve("arm_mount");
  frames.wrist = resolve("WR");
  frames.camera = resolve("C");
  frames.ee = resolve("EE");
  frames.forearm = resolve("forearm");
  for (int l = 0; l < kLegCount; ++l) {
    frames.feet[l] = resolve((std::string(kLegNames[l]) + "_foot").c_str());
  }

  // Leg joints: the three actuated ancestors of each foot, hip outward.
  for (int l = 0; l < kLegCount; ++l) {
    std::vector<int> chain;
    for (int a = frames.feet[l]; a > 0; a = links[a].parent) {
      if (links[a].joint != JointType::Fixed) chain.push_back(a);
    }
    if (chain.size() != kLegJointCount) {
      throw std::invalid_argument("leg " + std::string(kLegNames[l]) +
                                  " must have exactly 3 joints");
    }
    for (int j = 0; j < kLegJointCount; ++j) {
      leg_joint_links[l][j] = chain[kLegJointCount - 1 - j];
    }
  }

  // Arm joints: actuated links between the shoulder mount and the EE.
  std::vector<int> arm;
  for (int a = frames.ee; a > 0; a = links[a].parent) {
    if (a == frames.shoulder) break;
    if (links[a].joint != JointType::Fixed) arm.push_back(a);
  }
  if (arm.size() != kArmJointCount) {
    throw std::invalid_argument("arm must have exactly 7 rotational joints");
  }
  for (int j = 0; j < kArmJointCount; ++j) {
    const int link_idx = arm[kArmJointCount - 1 - j];
    if (links[link_idx].joint != JointType::Rotational) {
      throw std::invalid_argument("arm joints must be rotational");
    }
    arm_joint_links[j] = link_idx;
  }

  // Joint vector layout check: legs first, then the arm, contiguous.
  const int n_leg = kLegCount * kLegJointCount;
  for (int l = 0; l < kLegCount; ++l) {
    for (int j = 0; j < kLegJointCount; ++j) {
      const int qi = links[leg_joint_links[l][j]].joint_index;
      if (qi < 0 || qi >= n_leg) {
        throw std::invalid_argument("leg joints must precede arm joints in link order");
      }
    }
  }
  for (int j = 0; j < kArmJointCount; ++j) {
    if (links[arm_joint_links[j]].joint_index != n_leg + j) {
      throw std::invalid_argument("arm joints must be declared base-to-tip after the legs");
    }
  }
  if (joint_count_ != n_leg + kArmJointCount) {
    throw std::invalid_argument("model must have exactly 12 leg + 7 arm joints");
  }
}

}  // namespace quadarm::spatial

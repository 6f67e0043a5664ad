#include "quadarm/dynamics/arm_dynamics.hpp"

#include <Eigen/Cholesky>

namespace quadarm::dyn {

namespace {

using spatial::JointType;
using spatial::Link;
using spatial::rotation_exp;

struct MassProps {
  double mass = 0.0;
  Vector3d com = Vector3d::Zero();
  Matrix3d inertia = Matrix3d::Zero();  // about the CoM
};

// One revolute joint of a serial chain. `fixed` is the accumulated fixed
// transform from the previous joint's frame (or the root) to this joint.
struct ChainJoint {
  Pose fixed;
  Vector3d axis = Vector3d::UnitZ();
  MassProps body;
};

struct SerialChain {
  std::vector<ChainJoint> joints;
  Pose tip_offset;  // EE in the last joint's frame
};

// Motion/force 6-vectors are [linear; angular], referenced at the frame
// origin of whichever frame they are expressed in.
Vec6 to_child(const Pose& child_in_parent, const Vec6& motion_parent) {
  const Matrix3d rt = child_in_parent.rotation.transpose();
  const Vector3d w = motion_parent.tail<3>();
  Vec6 out;
  out.head<3>() = rt * (motion_parent.head<3>() + w.cross(child_in_parent.translation));
  out.tail<3>() = rt * w;
  return out;
}

Vec6 force_to_parent(const Pose& child_in_parent, const Vec6& force_child) {
  const Vector3d f = child_in_parent.rotation * force_child.head<3>();
  Vec6 out;
  out.head<3>() = f;
  out.tail<3>() = child_in_parent.rotation * force_child.tail<3>() +
                  child_in_parent.translation.cross(f);
  return out;
}

Vec6 cross_motion(const Vec6& a, const Vec6& b) {
  Vec6 out;
  out.head<3>() = a.tail<3>().cross(b.head<3>()) + a.head<3>().cross(b.tail<3>());
  out.tail<3>() = a.tail<3>().cross(b.tail<3>());
  return out;
}

Vec6 cross_force(const Vec6& motion, const Vec6& force) {
  Vec6 out;
  out.head<3>() = motion.tail<3>().cross(force.head<3>());
  out.tail<3>() = motion.tail<3>().cross(force.tail<3>()) +
                  motion.head<3>().cross(force.head<3>());
  return out;
}

Vec6 apply_inertia(const MassProps& body, const Vec6& motion) {
  const Vector3d v_com = motion.head<3>() + motion.tail<3>().cross(body.com);
  const Vector3d momentum = body.mass * v_com;
  Vec6 out;
  out.head<3>() = momentum;
  out.tail<3>() = body.inertia * motion.tail<3>() + body.com.cross(momentum);
  return out;
}

// Spatial inertia matrix about the frame origin.
Eigen::Matrix<double, 6, 6> inertia_matrix(const MassProps& body) {
  const Matrix3d cx = spatial::skew(body.com);
  Eigen::Matrix<double, 6, 6> m;
  m.topLeftCorner<3, 3>() = body.mass * Matrix3d::Identity();
  m.topRightCorner<3, 3>() = -body.mass * cx;
  m.bottomLeftCorner<3, 3>() = body.mass * cx;
  m.bottomRightCorner<3, 3>() = body.inertia - body.mass * cx * cx;
  return m;
}

MassProps transform_to_parent(const Pose& child_in_parent, const MassProps& body) {
  MassProps out;
  out.mass = body.mass;
  out.com = child_in_parent.apply(body.com);
  out.inertia = child_in_parent.rotation * body.inertia * child_in_parent.rotation.transpose();
  return out;
}

MassProps combine(const MassProps& a, const MassProps& b) {
  MassProps out;
  out.mass = a.mass + b.mass;
  if (out.mass <= 0.0) return out;
  out.com = (a.mass * a.com + b.mass * b.com) / out.mass;
  auto shifted = [&](const MassProps& p) -> Matrix3d {
    const Vector3d d = p.com - out.com;
    return p.inertia + p.mass * (d.squaredNorm() * Matrix3d::Identity() - d * d.transpose());
  };
  out.inertia = shifted(a) + shifted(b);
  return out;
}

// Arm joints as a serial chain rooted at the shoulder mount frame.
SerialChain arm_chain(const KinematicModel& model) {
  SerialChain chain;
  chain.joints.resize(spatial::kArmJointCount);
  int previous = model.frames.shoulder;
  for (int j = 0; j < spatial::kArmJointCount; ++j) {
    const int link_idx = model.arm_joint_links[j];
    Pose fixed = model.links[link_idx].origin;
    for (int a = model.links[link_idx].parent; a != previous; a = model.links[a].parent) {
      fixed = model.links[a].origin * fixed;
    }
    chain.joints[j].fixed = fixed;
    chain.joints[j].axis = model.links[link_idx].axis;
    chain.joints[j].body = {model.links[link_idx].inertia.mass,
                            model.links[link_idx].inertia.com,
                            model.links[link_idx].inertia.rotational};
    previous = link_idx;
  }
  Pose tip = Pose::Identity();
  for (int a = model.frames.ee; a != model.arm_joint_links.back(); a = model.links[a].parent) {
    tip = model.links[a].origin * tip;
  }
  chain.tip_offset = tip;
  return chain;
}

Pose joint_pose(const ChainJoint& joint, double q) {
  return joint.fixed * Pose{rotation_exp(joint.axis * q), Vector3d::Zero()};
}

// Inverse dynamics over a serial chain. Root motion enters through
// `v_root` / `a_root` (root coordinates); gravity is folded into a_root.
// Returns joint torques and, through `root_wrench`, the reaction the root
// must apply to the chain (root coordinates, root origin).
VectorXd chain_rnea(const SerialChain& chain, const VectorXd& q, const VectorXd& qd,
                    const VectorXd& qdd, const Vec6& v_root, const Vec6& a_root,
                    Vec6* root_wrench) {
  const int n = static_cast<int>(chain.joints.size());
  std::vector<Pose> x(n);          // link i in parent coords
  std::vector<Vec6> v(n), a(n), f(n);

  for (int i = 0; i < n; ++i) {
    x[i] = joint_pose(chain.joints[i], q[i]);
    Vec6 s = Vec6::Zero();
    s.tail<3>() = chain.joints[i].axis;
    const Vec6 vj = s * qd[i];
    v[i] = to_child(x[i], i == 0 ? v_root : v[i - 1]) + vj;
    a[i] = to_child(x[i], i == 0 ? a_root : a[i - 1]) + s * qdd[i] + cross_motion(v[i], vj);
    f[i] = apply_inertia(chain.joints[i].body, a[i]) +
           cross_force(v[i], apply_inertia(chain.joints[i].body, v[i]));
  }

  VectorXd tau(n);
  Vec6 carried = Vec6::Zero();
  for (int i = n - 1; i >= 0; --i) {
    const Vec6 total = f[i] + carried;
    tau[i] = chain.joints[i].axis.dot(total.tail<3>());
    carried = force_to_parent(x[i], total);
  }
  if (root_wrench != nullptr) *root_wrench = carried;
  return tau;
}

// Composite rigid body algorithm. When `floating` is set, the returned
// matrix gains six leading rows/columns for the root body `root_body`
// (root coordinates, root origin).
MatrixXd chain_crba(const SerialChain& chain, const VectorXd& q, bool floating,
                    const MassProps& root_body) {
  const int n = static_cast<int>(chain.joints.size());
  const int off = floating ? 6 : 0;
  MatrixXd m = MatrixXd::Zero(off + n, off + n);

  std::vector<Pose> x(n);
  for (int i = 0; i < n; ++i) x[i] = joint_pose(chain.joints[i], q[i]);

  std::vector<MassProps> composite(n);
  for (int i = n - 1; i >= 0; --i) {
    composite[i] = chain.joints[i].body;
    if (i + 1 < n) {
      composite[i] = combine(composite[i], transform_to_parent(x[i + 1], composite[i + 1]));
    }
  }

  for (int j = 0; j < n; ++j) {
    Vec6 s = Vec6::Zero();
    s.tail<3>() = chain.joints[j].axis;
    Vec6 force = apply_inertia(composite[j], s);
    m(off + j, off + j) = s.tail<3>().dot(force.tail<3>()) + s.head<3>().dot(force.head<3>());
    for (int i = j - 1; i >= 0; --i) {
      force = force_to_parent(x[i + 1], force);
      const double mij = chain.joints[i].axis.dot(force.tail<3>());
      m(off + i, off + j) = mij;
      m(off + j, off + i) = mij;
    }
    if (floating) {
      force = force_to_parent(x[0], force);
      m.block<6, 1>(0, off + j) = force;
      m.block<1, 6>(off + j, 0) = force.transpose();
    }
  }

  if (floating) {
    MassProps total = root_body;
    total = combine(total, transform_to_parent(x[0], composite[0]));
    m.topLeftCorner<6, 6>() = inertia_matrix(total);
  }
  return m;
}

void check_arm_vector(const VectorXd& v, const char* what) {
  if (v.size() != spatial::kArmJointCount) {
    throw std::invalid_argument(std::string(what) + " must have 7 entries");
  }
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

// Linear rows of the EE Jacobian in mount coordinates.
Eigen::Matrix<double, 3, 7> arm_linear_jacobian(const SerialChain& chain, const VectorXd& q) {
  std::vector<Pose> pose(chain.joints.size());
  Pose acc = Pose::Identity();
  for (size_t i = 0; i < chain.joints.size(); ++i) {
    acc = acc * joint_pose(chain.joints[i], q[static_cast<int>(i)]);
    pose[i] = acc;
  }
  const Vector3d tip = (acc * chain.tip_offset).translation;
  Eigen::Matrix<double, 3, 7> jac;
  for (int i = 0; i < spatial::kArmJointCount; ++i) {
    const Vector3d axis = pose[i].rotation * chain.joints[i].axis;
    jac.col(i) = axis.cross(tip - pose[i].translation);
  }
  return jac;
}

}  // namespace

MatrixXd arm_inertia(const KinematicModel& model, const VectorXd& q_arm) {
  check_arm_vector(q_arm, "q_arm");
  return chain_crba(arm_chain(model), q_arm, false, {});
}

VectorXd arm_bias(const KinematicModel& model, const VectorXd& q_arm, const VectorXd& qd_arm,
                  const Vector3d& gravity) {
  check_arm_vector(q_arm, "q_arm");
  check_arm_vector(qd_arm, "qd_arm");
  Vec6 a0 = Vec6::Zero();
  a0.head<3>() = -gravity;
  return chain_rnea(arm_chain(model), q_arm, qd_arm, VectorXd::Zero(7), Vec6::Zero(), a0,
                    nullptr);
}

VectorXd arm_inverse_dynamics(const KinematicModel& model, const VectorXd& q_arm,
                              const VectorXd& qd_arm, const VectorXd& qdd_arm,
                              const Vector3d& gravity, const Vector3d& force_ee) {
  check_arm_vector(q_arm, "q_arm");
  check_arm_vector(qd_arm, "qd_arm");
  check_arm_vector(qdd_arm, "qdd_arm");
  const SerialChain chain = arm_chain(model);
  Vec6 a0 = Vec6::Zero();
  a0.head<3>() = -gravity;
  VectorXd tau = chain_rnea(chain, q_arm, qd_arm, qdd_arm, Vec6::Zero(), a0, nullptr);
  if (!force_ee.isZero()) {
    tau -= arm_linear_jacobian(chain, q_arm).transpose() * force_ee;
  }
  return tau;
}

VectorXd arm_forward_dynamics(const KinematicModel& model, const VectorXd& q_arm,
                              const VectorXd& qd_arm, const VectorXd& tau_arm,
                              const Vector3d& force_ee, const Vector3d& gravity) {
  check_arm_vector(tau_arm, "tau_arm");
  const SerialChain chain = arm_chain(model);
  const MatrixXd m = chain_crba(chain, q_arm, false, {});
  Vec6 a0 = Vec6::Zero();
  a0.head<3>() = -gravity;
  const VectorXd h =
      chain_rnea(chain, q_arm, qd_arm, VectorXd::Zero(7), Vec6::Zero(), a0, nullptr);
  VectorXd rhs = tau_arm - h;
  if (!force_ee.isZero()) {
    rhs += arm_linear_jacobian(chain, q_arm).transpose() * force_ee;
  }
  return m.ldlt().solve(rhs);
}

Vec6 arm_coupling_wrench(const KinematicModel& model, const VectorXd& q_arm,
                         const VectorXd& qd_arm, const VectorXd& qdd_arm,
                         const Pose& base_pose) {
  check_arm_vector(q_arm, "q_arm");
  const SerialChain chain = arm_chain(model);

  // Gravity in mount coordinates (mount axes equal base axes).
  const Vector3d gravity_mount = base_pose.rotation.transpose() * kGravity;
  Vec6 a0 = Vec6::Zero();
  a0.head<3>() = -gravity_mount;
  Vec6 support = Vec6::Zero();
  chain_rnea(chain, q_arm, qd_arm, qdd_arm, Vec6::Zero(), a0, &support);

  // Mount pose relative to the base (fixed links only).
  Pose mount = Pose::Identity();
  for (int a = model.frames.shoulder; a > 0; a = model.links[a].parent) {
    mount = model.links[a].origin * mount;
  }

  // Reaction on the base = -(support wrench), moved to the base origin and
  // rotated into world axes.
  const Vec6 on_base_at_mount = -support;
  Vec6 base_coords = force_to_parent(mount, on_base_at_mount);
  Vec6 world;
  world.head<3>() = base_pose.rotation * base_coords.head<3>();
  world.tail<3>() = base_pose.rotation * base_coords.tail<3>();
  return world;
}

ArmDynamicsResult arm_dynamics(const KinematicModel& model, const VectorXd& q_arm,
                               const VectorXd& qd_arm, const VectorXd& qdd_arm,
                               const Pose& base_pose) {
  const Vector3d gravity_mount = base_pose.rotation.transpose() * kGravity;
  return {arm_inertia(model, q_arm), arm_bias(model, q_arm, qd_arm, gravity_mount),
          arm_coupling_wrench(model, q_arm, qd_arm, qdd_arm, base_pose)};
}

FloatingDynamics floating_dynamics(const KinematicModel& model, const Pose& base_pose,
                                   const Twist& base_twist_world, const VectorXd& q_arm,
                                   const VectorXd& qd_arm, const Vector3d& gravity_world) {
  check_arm_vector(q_arm, "q_arm");
  check_arm_vector(qd_arm, "qd_arm");

  // Fold the mount offset into the first joint so the chain roots at the
  // base frame directly.
  SerialChain chain = arm_chain(model);
  Pose mount = Pose::Identity();
  for (int a = model.frames.shoulder; a > 0; a = model.links[a].parent) {
    mount = model.links[a].origin * mount;
  }
  chain.joints[0].fixed = mount * chain.joints[0].fixed;

  const MassProps base_body = {model.links[0].inertia.mass, model.links[0].inertia.com,
                               model.links[0].inertia.rotational};

  FloatingDynamics out;
  out.inertia = chain_crba(chain, q_arm, true, base_body);

  const Matrix3d rt = base_pose.rotation.transpose();
  Vec6 v0;
  v0.head<3>() = rt * base_twist_world.linear;
  v0.tail<3>() = rt * base_twist_world.angular;
  Vec6 a0 = Vec6::Zero();
  a0.head<3>() = -(rt * gravity_world);

  Vec6 root_wrench = Vec6::Zero();
  const VectorXd tau_bias =
      chain_rnea(chain, q_arm, qd_arm, VectorXd::Zero(7), v0, a0, &root_wrench);

  // The base body's own Newton-Euler terms.
  const Vec6 base_force = apply_inertia(base_body, a0) +
                          cross_force(v0, apply_inertia(base_body, v0));

  out.bias.head<6>() = base_force + root_wrench;
  out.bias.tail<7>() = tau_bias;
  return out;
}

}  // namespace quadarm::dyn

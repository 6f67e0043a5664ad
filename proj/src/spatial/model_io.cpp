#include "quadarm/spatial/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include <yaml-cpp/yaml.h>

namespace quadarm::spatial {

namespace {

Vector3d parse_vec3(const YAML::Node& node) {
  if (!node || !node.IsSequence() || node.size() != 3) {
    throw std::runtime_error("expected a 3-element list");
  }
  return {node[0].as<double>(), node[1].as<double>(), node[2].as<double>()};
}

JointType parse_joint_type(const std::string& s) {
  if (s == "rotational") return JointType::Rotational;
  if (s == "prismatic") return JointType::Prismatic;
  if (s == "fixed") return JointType::Fixed;
  throw std::runtime_error("unknown joint type: " + s);
}

const char* joint_type_name(JointType t) {
  switch (t) {
    case JointType::Rotational: return "rotational";
    case JointType::Prismatic: return "prismatic";
    default: return "fixed";
  }
}

}  // namespace

KinematicModel load_model(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::Exception& e) {
    throw std::runtime_error("model file '" + path + "': " + e.what());
  }

  KinematicModel model;
  std::unordered_map<std::string, int> index_by_name;
  try {
    model.name = root["name"] ? root["name"].as<std::string>() : "unnamed";
    if (!root["links"] || !root["links"].IsSequence()) {
      throw std::runtime_error("missing 'links' list");
    }
    for (const auto& n : root["links"]) {
      Link link;
      link.name = n["name"].as<std::string>();
      if (n["parent"]) {
        const auto parent_name = n["parent"].as<std::string>();
        auto it = index_by_name.find(parent_name);
        if (it == index_by_name.end()) {
          throw std::runtime_error("link '" + link.name + "' references unknown parent '" +
                                   parent_name + "'");
        }
        link.parent = it->second;
      }
      if (const auto& o = n["origin"]) {
        if (o["xyz"]) link.origin.translation = parse_vec3(o["xyz"]);
        if (o["rpy"]) {
          const Vector3d rpy = parse_vec3(o["rpy"]);
          link.origin.rotation = rpy_to_rotation(rpy.x(), rpy.y(), rpy.z());
        }
      }
      if (const auto& j = n["joint"]) {
        link.joint = parse_joint_type(j["type"].as<std::string>());
        if (link.joint != JointType::Fixed) link.axis = parse_vec3(j["axis"]).normalized();
      }
      if (const auto& in = n["inertia"]) {
        link.inertia.mass = in["mass"].as<double>();
        if (in["com"]) link.inertia.com = parse_vec3(in["com"]);
        if (in["moments"]) {
          // Ixx Iyy Izz Ixy Ixz Iyz about the CoM.
          const auto& m = in["moments"];
          if (!m.IsSequence() || m.size() != 6) {
            throw std::runtime_error("inertia moments must have 6 entries");
          }
          Matrix3d rot;
          rot << m[0].as<double>(), m[3].as<double>(), m[4].as<double>(),
                 m[3].as<double>(), m[1].as<double>(), m[5].as<double>(),
                 m[4].as<double>(), m[5].as<double>(), m[2].as<double>();
          link.inertia.rotational = rot;
        }
      }
      index_by_name[link.name] = static_cast<int>(model.links.size());
      model.links.push_back(link);
    }
    if (const auto& home = root["arm_home"]) {
      if (!home.IsSequence() || home.size() != kArmJointCount) {
        throw std::runtime_error("arm_home must have 7 entries");
      }
      for (int i = 0; i < kArmJointCount; ++i) model.arm_home[i] = home[i].as<double>();
    }
  } catch (const YAML::Exception& e) {
    throw std::runtime_error("model file '" + path + "' line " +
                             std::to_string(e.mark.line + 1) + ": " + e.what());
  }
  model.finalize();
  return model;
}

void save_model(const KinematicModel& model, const std::string& path) {
  YAML::Emitter out;
  out.SetDoublePrecision(12);
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << model.name;
  out << YAML::Key << "links" << YAML::Value << YAML::BeginSeq;
  for (const auto& link : model.links) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << link.name;
    if (link.parent >= 0) {
      out << YAML::Key << "parent" << YAML::Value << model.links[link.parent].name;
    }
    const Vector3d rpy = rotation_to_rpy(link.origin.rotation);
    if (link.origin.translation.norm() > 0 || rpy.norm() > 0) {
      out << YAML::Key << "origin" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "xyz" << YAML::Value << YAML::Flow << YAML::BeginSeq
          << link.origin.translation.x() << link.origin.translation.y()
          << link.origin.translation.z() << YAML::EndSeq;
      if (rpy.norm() > 0) {
        out << YAML::Key << "rpy" << YAML::Value << YAML::Flow << YAML::BeginSeq << rpy.x()
            << rpy.y() << rpy.z() << YAML::EndSeq;
      }
      out << YAML::EndMap;
    }
    if (link.joint != JointType::Fixed) {
      out << YAML::Key << "joint" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "type" << YAML::Value << joint_type_name(link.joint);
      out << YAML::Key << "axis" << YAML::Value << YAML::Flow << YAML::BeginSeq << link.axis.x()
          << link.axis.y() << link.axis.z() << YAML::EndSeq;
      out << YAML::EndMap;
    }
    if (link.inertia.mass > 0) {
      out << YAML::Key << "inertia" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "mass" << YAML::Value << link.inertia.mass;
      out << YAML::Key << "com" << YAML::Value << YAML::Flow << YAML::BeginSeq
          << link.inertia.com.x() << link.inertia.com.y() << link.inertia.com.z()
          << YAML::EndSeq;
      const Matrix3d& r = link.inertia.rotational;
      out << YAML::Key << "moments" << YAML::Value << YAML::Flow << YAML::BeginSeq << r(0, 0)
          << r(1, 1) << r(2, 2) << r(0, 1) << r(0, 2) << r(1, 2) << YAML::EndSeq;
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "arm_home" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (int i = 0; i < kArmJointCount; ++i) out << model.arm_home[i];
  out << YAML::EndSeq;
  out << YAML::EndMap;

  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write model file: " + path);
  file << out.c_str() << "\n";
}

KinematicModel make_default_model() {
  KinematicModel model;
  model.name = "quadarm-small";

  auto add = [&](Link link) {
    model.links.push_back(std::move(link));
    return static_cast<int>(model.links.size()) - 1;
  };
  auto fixed = [&](const std::string& name, int parent, const Vector3d& xyz,
                   const Matrix3d& rot = Matrix3d::Identity()) {
    Link l;
    l.name = name;
    l.parent = parent;
    l.origin = {rot, xyz};
    return add(std::move(l));
  };
  auto revolute = [&](const std::string& name, int parent, const Vector3d& xyz,
                      const Vector3d& axis, double mass, const Vector3d& com,
                      const Vector3d& moments) {
    Link l;
    l.name = name;
    l.parent = parent;
    l.origin.translation = xyz;
    l.joint = JointType::Rotational;
    l.axis = axis;
    l.inertia.mass = mass;
    l.inertia.com = com;
    l.inertia.rotational = moments.asDiagonal();
    return add(std::move(l));
  };

  // Trunk: 0.44 x 0.26 x 0.12 m box, origin at the CoM.
  {
    Link base;
    base.name = "base";
    base.inertia.mass = 16.0;
    base.inertia.rotational = Vector3d(0.1093, 0.2773, 0.3483).asDiagonal();
    add(std::move(base));
  }

  // Legs: HAA roll, HFE/KFE pitch, massless links (the plant pins the feet).
  const double hip_x = 0.18, hip_y = 0.13, hip_z = -0.03;
  const double hfe_y = 0.05, upper = 0.16, lower = 0.18;
  for (int leg = 0; leg < kLegCount; ++leg) {
    const double sx = leg < 2 ? 1.0 : -1.0;
    const double sy = (leg % 2 == 0) ? 1.0 : -1.0;
    const std::string p = kLegNames[leg];
    const int haa = revolute(p + "_haa", 0, {sx * hip_x, sy * hip_y, hip_z},
                             Vector3d::UnitX(), 0.0, Vector3d::Zero(), Vector3d::Zero());
    const int hfe = revolute(p + "_hfe", haa, {0.0, sy * hfe_y, 0.0}, Vector3d::UnitY(), 0.0,
                             Vector3d::Zero(), Vector3d::Zero());
    const int kfe = revolute(p + "_kfe", hfe, {0.0, 0.0, -upper}, Vector3d::UnitY(), 0.0,
                             Vector3d::Zero(), Vector3d::Zero());
    fixed(p + "_foot", kfe, {0.0, 0.0, -lower});
  }

  // 7-DoF arm on the front of the trunk, straight up at q = 0.
  const int mount = fixed("arm_mount", 0, {0.10, 0.0, 0.08});
  const int j1 = revolute("arm_j1", mount, {0, 0, 0}, Vector3d::UnitZ(), 0.30,
                          {0, 0, 0.03}, {1e-4, 1e-4, 5e-5});
  const int j2 = revolute("arm_j2", j1, {0, 0, 0.06}, Vector3d::UnitY(), 0.35,
                          {0, 0, 0.07}, {6e-4, 6e-4, 6e-5});
  const int j3 = revolute("arm_j3", j2, {0, 0, 0.14}, Vector3d::UnitZ(), 0.25,
                          {0, 0, 0.025}, {1e-4, 1e-4, 5e-5});
  const int j4 = revolute("arm_j4", j3, {0, 0, 0.05}, Vector3d::UnitY(), 0.30,
                          {0, 0, 0.09}, {8e-4, 8e-4, 5e-5});
  fixed("forearm", j4, {0, 0, 0.09});
  const int wr = fixed("WR", j4, {0, 0, 0.18});
  const int j5 = revolute("arm_j5", wr, {0, 0, 0}, Vector3d::UnitZ(), 0.15,
                          {0, 0, 0.02}, {5e-5, 5e-5, 2e-5});
  const int j6 = revolute("arm_j6", j5, {0, 0, 0.045}, Vector3d::UnitY(), 0.12,
                          {0, 0, 0.02}, {4e-5, 4e-5, 2e-5});
  const int j7 = revolute("arm_j7", j6, {0, 0, 0.045}, Vector3d::UnitZ(), 0.18,
                          {0, 0, 0.04}, {1e-4, 1e-4, 5e-5});
  // Camera: z is the optical axis, x points to the image right so that at
  // the home posture x is horizontal.
  const int cam = fixed("C", j7, {0, 0, 0.03}, rot_z(-M_PI / 2.0));
  fixed("EE", cam, {0, 0, 0.03});

  // Periscope home: upper arm forward, forearm down, camera level 5 deg
  // below the horizon. The wrist axes map to camera pan/tilt/roll here.
  model.arm_home << 0.0, 95.0 * M_PI / 180.0, 0.0, 90.0 * M_PI / 180.0, 0.0,
      -90.0 * M_PI / 180.0, 0.0;

  model.finalize();
  return model;
}

}  // namespace quadarm::spatial

#include "exoadapt/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "exoadapt/error.hpp"

namespace exoadapt {

void validate_chain(const KinematicChain& chain) {
  if (chain.joints.empty()) throw ConfigError("chain must have at least one joint");
  if (chain.link_geometry.size() != chain.joints.size())
    throw ConfigError("chain link geometry count must equal joint count");
  for (const JointSpec& j : chain.joints) {
    if (j.kind != JointKind::fixed) {
      if (std::abs(j.axis.norm() - 1.0) > 1e-9)
        throw ConfigError("joint '" + j.name + "': axis must be unit length");
      if (j.limit_lo > j.limit_hi)
        throw ConfigError("joint '" + j.name + "': limit_lo > limit_hi");
    }
    if (j.encoder_sign != 1.0 && j.encoder_sign != -1.0)
      throw ConfigError("joint '" + j.name + "': encoder_sign must be +1 or -1");
  }
}

JointState clamp_to_limits(const KinematicChain& chain, const JointState& state) {
  if (state.q.size() != chain.joint_count())
    throw DimensionError("clamp_to_limits: joint state length does not match chain");
  JointState out = state;
  for (std::size_t i = 0; i < out.q.size(); ++i) {
    const JointSpec& j = chain.joints[i];
    if (j.kind == JointKind::fixed) continue;
    out.q[i] = std::clamp(out.q[i], j.limit_lo, j.limit_hi);
  }
  return out;
}

FkResult forward_kinematics(const KinematicChain& chain, const JointState& state) {
  JointState clamped = clamp_to_limits(chain, state);
  FkResult out;
  out.link_poses.reserve(chain.joint_count());
  Pose cur;
  for (std::size_t i = 0; i < chain.joint_count(); ++i) {
    const JointSpec& j = chain.joints[i];
    cur = compose(cur, j.origin);
    switch (j.kind) {
      case JointKind::revolute:
        cur = compose(cur, Pose{Eigen::AngleAxisd(clamped.q[i], j.axis).toRotationMatrix(),
                                Eigen::Vector3d::Zero()});
        break;
      case JointKind::prismatic:
        cur = compose(cur, Pose{Eigen::Matrix3d::Identity(), j.axis * clamped.q[i]});
        break;
      case JointKind::fixed:
        break;
    }
    out.link_poses.push_back(cur);
  }
  out.end_effector = compose(cur, chain.tool);
  return out;
}

JointState map_exo_to_robot(const JointState& q_exo, const JointMapping& mapping,
                            const KinematicChain& robot) {
  if (mapping.size() != robot.joint_count())
    throw DimensionError("map_exo_to_robot: mapping must cover every robot joint");
  JointState out;
  out.q.resize(mapping.size());
  for (std::size_t j = 0; j < mapping.size(); ++j) {
    if (mapping[j].exo_index >= q_exo.q.size())
      throw DimensionError("map_exo_to_robot: exo joint index out of range");
    out.q[j] = mapping[j].scale * q_exo.q[mapping[j].exo_index] + mapping[j].offset;
  }
  out.gripper_width = q_exo.gripper_width;
  out.timestamp = q_exo.timestamp;
  return clamp_to_limits(robot, out);
}

JointState apply_joint_calibration(const KinematicChain& chain, std::span<const double> raw,
                                   std::span<const double> zero, std::span<const double> delta,
                                   double gripper_width, double timestamp) {
  const std::size_t n = chain.joint_count();
  if (raw.size() != n || zero.size() != n || (!delta.empty() && delta.size() != n))
    throw DimensionError("apply_joint_calibration: reading length does not match chain");
  JointState out;
  out.q.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const JointSpec& j = chain.joints[i];
    double d = delta.empty() ? 0.0 : delta[i];
    out.q[i] = j.encoder_sign * j.encoder_scale * raw[i] - (zero[i] + d);
  }
  out.gripper_width = gripper_width;
  out.timestamp = timestamp;
  return out;
}

}  // namespace exoadapt

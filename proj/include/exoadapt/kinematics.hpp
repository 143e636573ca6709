#pragma once

#include <span>
#include <string>
#include <vector>

#include "exoadapt/pose.hpp"
#include "exoadapt/shapes.hpp"

namespace exoadapt {

enum class JointKind { revolute, prismatic, fixed };

struct JointSpec {
  std::string name;
  JointKind kind = JointKind::revolute;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();  // link frame, unit norm
  Pose origin;                                      // parent link frame -> joint frame
  double limit_lo = 0.0;                            // radians or meters
  double limit_hi = 0.0;
  double encoder_scale = 1.0;  // raw reading -> radians/meters
  double encoder_sign = 1.0;   // +1 or -1
};

/// Strictly serial chain: joint i attaches link i to link i-1. Link geometry
/// holds one primitive set per link; `tool` maps the last link frame to the
/// end-effector (gripper center) frame.
struct KinematicChain {
  std::vector<JointSpec> joints;
  std::vector<std::vector<PrimitiveShape>> link_geometry;
  Pose tool;

  std::size_t joint_count() const { return joints.size(); }
};

/// Throws ConfigError when axes are not unit, limits are inverted, or the
/// geometry list does not match the joint count.
void validate_chain(const KinematicChain& chain);

struct JointState {
  std::vector<double> q;        // radians / meters, one per joint
  double gripper_width = 0.0;   // meters
  double timestamp = 0.0;       // seconds
};

struct FkResult {
  std::vector<Pose> link_poses;  // one per link, chain-base frame
  Pose end_effector;
};

/// Poses every link of the chain. Values outside joint limits are clamped
/// before evaluation. Deterministic.
FkResult forward_kinematics(const KinematicChain& chain, const JointState& state);

JointState clamp_to_limits(const KinematicChain& chain, const JointState& state);

struct JointMapEntry {
  std::size_t exo_index = 0;
  double scale = 1.0;
  double offset = 0.0;
};
using JointMapping = std::vector<JointMapEntry>;  // one entry per robot joint

/// q_robot[j] = scale_j * q_exo[exo_index_j] + offset_j, clamped to the robot
/// chain's limits. Gripper width and timestamp pass through.
JointState map_exo_to_robot(const JointState& q_exo, const JointMapping& mapping,
                            const KinematicChain& robot);

/// q[i] = encoder_sign_i * encoder_scale_i * raw[i] - (zero[i] + delta[i]).
/// `delta` may be empty (treated as zeros).
JointState apply_joint_calibration(const KinematicChain& chain, std::span<const double> raw,
                                   std::span<const double> zero, std::span<const double> delta = {},
                                   double gripper_width = 0.0, double timestamp = 0.0);

}  // namespace exoadapt

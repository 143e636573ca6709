#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <span>
#include <vector>

#include "exoadapt/pose.hpp"

namespace exoadapt {

/// End-effector action for one arm, camera frame: absolute translation,
/// rotation in the 6D format, gripper width.
struct ArmAction {
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
  Rot6D rotation = {1, 0, 0, 0, 1, 0};
  double gripper_width = 0.0;
};

struct ActionRecord {
  double timestamp = 0.0;
  std::vector<ArmAction> arms;
};

/// Time-ordered action records; timestamps strictly increasing.
using Trajectory = std::vector<ActionRecord>;

void validate_trajectory(const Trajectory& traj);

struct SamplingThresholds {
  double translation = 0.005;            // meters
  double rotation = 0.1308996938995747;  // radians (pi/24)
  double width = 0.005;                  // meters
};

/// Greedy redundancy removal: versus the last kept record, a record is
/// dropped iff every arm is strictly below all three thresholds. First and
/// last records are always retained.
Trajectory resample(const Trajectory& traj, const SamplingThresholds& th);

/// Geodesic angle between two rotations: arccos((trace(R1^T R2) - 1) / 2),
/// clamped to [0, pi].
double rotation_distance(const Eigen::Matrix3d& r1, const Eigen::Matrix3d& r2);

struct ArmStep {
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();  // previous EE frame
  Rot6D rotation = {1, 0, 0, 0, 1, 0};
  double width_delta = 0.0;
};

struct RelativeStep {
  double dt = 0.0;
  std::vector<ArmStep> arms;
};

/// Per-step deltas expressed in the previous record's end-effector frame.
/// Exact inverse pair: relative_to_absolute(traj[0], absolute_to_relative(traj))
/// reproduces traj.
std::vector<RelativeStep> absolute_to_relative(const Trajectory& traj);
Trajectory relative_to_absolute(const ActionRecord& start, std::span<const RelativeStep> deltas);

/// Sliding windows of `horizon` actions at stride 1, one window per record;
/// trailing windows repeat the final action. `valid_count` actions in each
/// window are real, the rest is padding.
struct ActionChunk {
  std::vector<ActionRecord> actions;
  std::size_t valid_count = 0;
};

std::vector<ActionChunk> chunk(const Trajectory& traj, std::size_t horizon);

/// Line-delimited trajectory serialization (one record per line).
Trajectory load_trajectory(const std::filesystem::path& path);
void save_trajectory(const Trajectory& traj, const std::filesystem::path& path);

}  // namespace exoadapt

#include "exoadapt/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "exoadapt/error.hpp"

namespace exoadapt {

void validate_trajectory(const Trajectory& traj) {
  for (std::size_t i = 1; i < traj.size(); ++i) {
    if (traj[i].timestamp <= traj[i - 1].timestamp)
      throw DataError("trajectory: timestamps must be strictly increasing at record " +
                      std::to_string(i));
    if (traj[i].arms.size() != traj[0].arms.size())
      throw DataError("trajectory: arm count changes at record " + std::to_string(i));
  }
}

double rotation_distance(const Eigen::Matrix3d& r1, const Eigen::Matrix3d& r2) {
  double c = ((r1.transpose() * r2).trace() - 1.0) / 2.0;
  return std::acos(std::clamp(c, -1.0, 1.0));
}

namespace {

bool below_all_thresholds(const ActionRecord& a, const ActionRecord& b,
                          const SamplingThresholds& th) {
  for (std::size_t arm = 0; arm < a.arms.size(); ++arm) {
    const ArmAction& x = a.arms[arm];
    const ArmAction& y = b.arms[arm];
    if ((x.translation - y.translation).norm() >= th.translation) return false;
    if (rotation_distance(rot6d_to_rotmat(x.rotation), rot6d_to_rotmat(y.rotation)) >= th.rotation)
      return false;
    if (std::abs(x.gripper_width - y.gripper_width) >= th.width) return false;
  }
  return true;
}

}  // namespace

Trajectory resample(const Trajectory& traj, const SamplingThresholds& th) {
  if (traj.empty()) throw DataError("resample: trajectory is empty");
  if (th.translation <= 0 || th.rotation <= 0 || th.width <= 0)
    throw ConfigError("resample: thresholds must be positive");
  Trajectory out;
  out.push_back(traj.front());
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    if (!below_all_thresholds(out.back(), traj[i], th)) out.push_back(traj[i]);
  }
  if (traj.size() > 1) out.push_back(traj.back());
  return out;
}

std::vector<RelativeStep> absolute_to_relative(const Trajectory& traj) {
  if (traj.size() < 2) throw DataError("absolute_to_relative: need at least 2 records");
  std::vector<RelativeStep> deltas;
  deltas.reserve(traj.size() - 1);
  for (std::size_t i = 1; i < traj.size(); ++i) {
    if (traj[i].arms.size() != traj[i - 1].arms.size())
      throw DimensionError("absolute_to_relative: arm count mismatch");
    RelativeStep step;
    step.dt = traj[i].timestamp - traj[i - 1].timestamp;
    for (std::size_t a = 0; a < traj[i].arms.size(); ++a) {
      const ArmAction& prev = traj[i - 1].arms[a];
      const ArmAction& cur = traj[i].arms[a];
      Pose t_prev{rot6d_to_rotmat(prev.rotation), prev.translation};
      Pose t_cur{rot6d_to_rotmat(cur.rotation), cur.translation};
      Pose d = compose(inverse(t_prev), t_cur);
      ArmStep s;
      s.translation = d.translation;
      s.rotation = rotmat_to_rot6d(d.rotation);
      s.width_delta = cur.gripper_width - prev.gripper_width;
      step.arms.push_back(s);
    }
    deltas.push_back(std::move(step));
  }
  return deltas;
}

Trajectory relative_to_absolute(const ActionRecord& start, std::span<const RelativeStep> deltas) {
  if (deltas.empty()) throw DataError("relative_to_absolute: no deltas");
  Trajectory out;
  out.reserve(deltas.size() + 1);
  out.push_back(start);
  for (const RelativeStep& step : deltas) {
    if (step.arms.size() != start.arms.size())
      throw DimensionError("relative_to_absolute: arm count mismatch");
    const ActionRecord& prev = out.back();
    ActionRecord cur;
    cur.timestamp = prev.timestamp + step.dt;
    for (std::size_t a = 0; a < step.arms.size(); ++a) {
      Pose t_prev{rot6d_to_rotmat(prev.arms[a].rotation), prev.arms[a].translation};
      Pose d{rot6d_to_rotmat(step.arms[a].rotation), step.arms[a].translation};
      Pose t_cur = compose(t_prev, d);
      ArmAction act;
      act.translation = t_cur.translation;
      act.rotation = rotmat_to_rot6d(t_cur.rotation);
      act.gripper_width = prev.arms[a].gripper_width + step.arms[a].width_delta;
      cur.arms.push_back(act);
    }
    out.push_back(std::move(cur));
  }
  return out;
}

std::vector<ActionChunk> chunk(const Trajectory& traj, std::size_t horizon) {
  if (horizon < 1) throw ConfigError("chunk: horizon must be >= 1");
  std::vector<ActionChunk> out;
  out.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    ActionChunk c;
    c.actions.reserve(horizon);
    c.valid_count = std::min(horizon, traj.size() - k);
    for (std::size_t j = 0; j < horizon; ++j)
      c.actions.push_back(traj[std::min(k + j, traj.size() - 1)]);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

void append_number(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += ' ';
  line += buf;
}

}  // namespace

void save_trajectory(const Trajectory& traj, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw DataError("save_trajectory: cannot open " + path.string());
  for (const ActionRecord& rec : traj) {
    std::string line;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", rec.timestamp);
    line += buf;
    line += ' ';
    line += std::to_string(rec.arms.size());
    for (const ArmAction& arm : rec.arms) {
      for (int i = 0; i < 3; ++i) append_number(line, arm.translation[i]);
      for (double r : arm.rotation) append_number(line, r);
      append_number(line, arm.gripper_width);
    }
    f << line << '\n';
  }
  if (!f) throw DataError("save_trajectory: write failed for " + path.string());
}

Trajectory load_trajectory(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw DataError("load_trajectory: cannot open " + path.string());
  Trajectory out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    ActionRecord rec;
    std::size_t arm_count = 0;
    if (!(ss >> rec.timestamp >> arm_count))
      throw DataError("load_trajectory: malformed line " + std::to_string(line_no) + " in " +
                      path.string());
    for (std::size_t a = 0; a < arm_count; ++a) {
      ArmAction arm;
      bool ok = static_cast<bool>(ss >> arm.translation.x() >> arm.translation.y() >>
                                  arm.translation.z());
      for (double& r : arm.rotation) ok = ok && static_cast<bool>(ss >> r);
      ok = ok && static_cast<bool>(ss >> arm.gripper_width);
      if (!ok)
        throw DataError("load_trajectory: malformed line " + std::to_string(line_no) + " in " +
                        path.string());
      rec.arms.push_back(arm);
    }
    out.push_back(std::move(rec));
  }
  validate_trajectory(out);
  return out;
}

}  // namespace exoadapt

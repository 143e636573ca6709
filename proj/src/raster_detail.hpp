#pragma once

// Internal shared pieces of the ray-cast renderer. The culled parallel
// renderer and the serial reference renderer both call these, so their
// outputs stay bit-identical.

#include <Eigen/Dense>
#include <limits>
#include <span>
#include <vector>

#include "exoadapt/raster.hpp"

namespace exoadapt::detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PosedPrimitive {
  ShapeKind kind;
  Eigen::Vector3d a;     // sphere center / capsule endpoint / box center
  Eigen::Vector3d b;     // capsule endpoint
  Eigen::Vector3d axis;  // capsule unit axis (a -> b)
  double seg_len = 0;    // capsule segment length
  Eigen::Matrix3d rot;   // box world rotation
  Eigen::Vector3d half;  // box half extents
  double radius = 0;
  int link_id = 0;  // global link index across chains
  Eigen::Vector3d bound_center;
  double bound_radius = 0;
};

/// FK-pose every link primitive into the camera frame. Throws ConfigError
/// when a chain lacks link geometry.
std::vector<PosedPrimitive> pose_scene(const SceneModel& model, std::span<const JointState> q);

/// Smallest t > 0 with |t*d - c| = r, else +inf. Ray origin is the camera
/// center; t equals camera z when d.z() == 1.
double ray_sphere(const Eigen::Vector3d& d, const Eigen::Vector3d& c, double r);

double intersect(const PosedPrimitive& p, const Eigen::Vector3d& d);

/// Outward surface normal at point `hit` on primitive p.
Eigen::Vector3d surface_normal(const PosedPrimitive& p, const Eigen::Vector3d& hit);

/// Sub-ray direction tables: dir = (dir_x[gx], dir_y[gy], 1) for sub-ray
/// column gx in [0, width*s) and row gy in [0, height*s).
void subray_tables(const CameraIntrinsics& k, int s, std::vector<double>& dir_x,
                   std::vector<double>& dir_y);

/// Per-link flat shade colors; uses model.link_colors when provided, else a
/// fixed palette indexed by global link id.
std::vector<Eigen::Vector3d> link_shade_colors(const SceneModel& model);

Eigen::Vector3d shade(const Eigen::Vector3d& base_color, const Eigen::Vector3d& normal);

}  // namespace exoadapt::detail

#pragma once

#include <Eigen/Dense>
#include <span>
#include <string_view>
#include <vector>

#include "exoadapt/image.hpp"

namespace exoadapt {

struct CameraIntrinsics {
  double fx = 0, fy = 0;
  double cx = 0, cy = 0;
  int width = 0, height = 0;
};

void validate_intrinsics(const CameraIntrinsics& k);

/// Image-shaped point cloud; pixel (u,v) maps to index v*width + u.
struct OrganizedCloud {
  int width = 0;
  int height = 0;
  std::vector<Eigen::Vector3d> points;
  std::vector<std::uint8_t> valid;

  const Eigen::Vector3d& at(int x, int y) const { return points[static_cast<std::size_t>(y) * width + x]; }
  bool valid_at(int x, int y) const { return valid[static_cast<std::size_t>(y) * width + x] != 0; }
};

/// Unordered point cloud with optional per-point attribute rows.
struct PointCloud {
  std::vector<Eigen::Vector3d> points;
  std::size_t attribute_dim = 0;
  std::vector<double> attributes;  // row-major, points.size() * attribute_dim

  std::size_t size() const { return points.size(); }
};

struct CropBox {
  Eigen::Vector3d min = Eigen::Vector3d::Zero();
  Eigen::Vector3d max = Eigen::Vector3d::Zero();

  bool contains(const Eigen::Vector3d& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }
};

/// Workspace crop presets, camera frame, meters.
CropBox crop_box_preset(std::string_view name);  // "teleop" | "wild"

/// Pinhole unprojection. Depth is millimeters, 0 = invalid; output points are
/// meters in the camera frame, pixel organization preserved.
OrganizedCloud unproject(const DepthImage& depth, const CameraIntrinsics& k);

/// Pinhole forward map, (u, v) in pixel-index coordinates. Requires z > 0.
Eigen::Vector2d project_point(const Eigen::Vector3d& p, const CameraIntrinsics& k);

/// Valid points only, with optional RGB attributes ([0,1] per channel) taken
/// from a color image of matching shape.
PointCloud compact(const OrganizedCloud& cloud, const ColorImage* color = nullptr);

/// One output point per occupied voxel: the centroid of the voxel's points,
/// attributes averaged. Bin index = floor(coord / voxel) per axis. Output
/// order follows first appearance of each voxel.
PointCloud voxel_downsample(const PointCloud& pc, double voxel);

PointCloud crop(const PointCloud& pc, const CropBox& box);

/// Pooled reference coordinates: adaptive average pooling of an organized
/// cloud down to h x w. Cell (i,j) is the mean of valid points in the window
/// rows [floor(i*H/h), ceil((i+1)*H/h)) x likewise for columns; invalid when
/// the window holds no valid point.
struct CoordGrid {
  int height = 0;
  int width = 0;
  std::vector<Eigen::Vector3d> coords;
  std::vector<std::uint8_t> valid;
};

CoordGrid pool_reference_coords(const OrganizedCloud& cloud, int h, int w);

/// Exact brute-force k nearest neighbors by Euclidean distance, ties broken
/// by ascending index. Returns min(m, refs.size()) results, distance ascending.
struct KnnResult {
  std::vector<std::size_t> indices;
  std::vector<double> distances;
};

KnnResult knn(const Eigen::Vector3d& query, std::span<const Eigen::Vector3d> refs, std::size_t m);

}  // namespace exoadapt

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace exoadapt {

/// Dense 2D feature map with pooled reference 3D coordinates. Cells without a
/// reference coordinate (no depth) are marked invalid and never act as
/// interpolation neighbors.
struct FeatureGrid {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> features;  // height * width * channels, row-major
  std::vector<Eigen::Vector3d> coords;
  std::vector<std::uint8_t> valid;

  std::size_t cell_count() const { return static_cast<std::size_t>(height) * width; }
};

void validate_grid(const FeatureGrid& grid);

/// Sparse per-point geometric features at seed coordinates.
struct SeedFeatures {
  int channels = 0;
  std::vector<double> features;  // count * channels
  std::vector<Eigen::Vector3d> coords;

  std::size_t count() const { return coords.size(); }
};

/// Row layout: [geometric | interpolated semantic].
struct FusedFeatures {
  int channels = 0;
  std::vector<double> features;
  std::vector<Eigen::Vector3d> coords;
};

/// Inverse-distance weighted interpolation of the grid features at a 3D
/// point over its M nearest valid cells (ties by flattened cell index).
/// A neighbor closer than 1e-9 m returns that cell's feature directly.
std::vector<double> interpolate(const Eigen::Vector3d& point, const FeatureGrid& grid, int m);

/// Fuses the grid onto every seed: row i = concat(seed features i,
/// interpolate(seed coord i)). Row order preserved.
FusedFeatures fuse(const SeedFeatures& seeds, const FeatureGrid& grid, int m = 3);

namespace reference {

/// Serial full-sort counterpart of fuse(), kept for testing and benchmarks.
FusedFeatures fuse(const SeedFeatures& seeds, const FeatureGrid& grid, int m = 3);

}  // namespace reference

}  // namespace exoadapt

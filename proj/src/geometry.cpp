#include "exoadapt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "exoadapt/error.hpp"

namespace exoadapt {

void validate_intrinsics(const CameraIntrinsics& k) {
  if (k.width <= 0 || k.height <= 0) throw ConfigError("intrinsics: image size must be positive");
  if (k.fx <= 0 || k.fy <= 0) throw ConfigError("intrinsics: focal lengths must be positive");
  if (k.cx <= 0 || k.cx >= k.width || k.cy <= 0 || k.cy >= k.height)
    throw ConfigError("intrinsics: principal point must lie inside the image");
}

CropBox crop_box_preset(std::string_view name) {
  if (name == "teleop") return CropBox{{-0.70, -0.30, 0.90}, {0.70, 0.55, 1.55}};
  if (name == "wild") return CropBox{{-0.70, -0.30, 0.75}, {0.70, 0.45, 1.40}};
  throw ConfigError("unknown crop preset '" + std::string(name) + "' (expected teleop|wild)");
}

OrganizedCloud unproject(const DepthImage& depth, const CameraIntrinsics& k) {
  if (!depth.same_shape(k.width, k.height))
    throw DimensionError("unproject: depth image size does not match intrinsics");
  OrganizedCloud out;
  out.width = depth.width;
  out.height = depth.height;
  out.points.resize(depth.pixel_count(), Eigen::Vector3d::Zero());
  out.valid.resize(depth.pixel_count(), 0);
#pragma omp parallel for schedule(static)
  for (int v = 0; v < depth.height; ++v) {
    for (int u = 0; u < depth.width; ++u) {
      std::size_t idx = static_cast<std::size_t>(v) * depth.width + u;
      std::uint16_t d = depth.data[idx];
      if (d == 0) continue;
      double z = d / 1000.0;
      out.points[idx] = Eigen::Vector3d((u - k.cx) * z / k.fx, (v - k.cy) * z / k.fy, z);
      out.valid[idx] = 1;
    }
  }
  return out;
}

Eigen::Vector2d project_point(const Eigen::Vector3d& p, const CameraIntrinsics& k) {
  if (p.z() <= 0) throw NumericalError("project_point: point is behind the camera");
  return Eigen::Vector2d(k.fx * p.x() / p.z() + k.cx, k.fy * p.y() / p.z() + k.cy);
}

PointCloud compact(const OrganizedCloud& cloud, const ColorImage* color) {
  if (color && !(color->width == cloud.width && color->height == cloud.height))
    throw DimensionError("compact: color image size does not match cloud");
  PointCloud out;
  out.attribute_dim = color ? 3 : 0;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (!cloud.valid[i]) continue;
    out.points.push_back(cloud.points[i]);
    if (color) {
      for (int c = 0; c < 3; ++c) out.attributes.push_back(color->data[i * 3 + c] / 255.0);
    }
  }
  return out;
}

namespace {

struct VoxelKey {
  std::int64_t x, y, z;
  bool operator==(const VoxelKey&) const = default;
};

struct VoxelKeyHash {
  std::size_t operator()(const VoxelKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.x) * 73856093u;
    h ^= static_cast<std::size_t>(k.y) * 19349663u;
    h ^= static_cast<std::size_t>(k.z) * 83492791u;
    return h;
  }
};

}  // namespace

PointCloud voxel_downsample(const PointCloud& pc, double voxel) {
  if (voxel <= 0) throw ConfigError("voxel_downsample: voxel size must be positive");
  const std::size_t dim = pc.attribute_dim;
  std::unordered_map<VoxelKey, std::size_t, VoxelKeyHash> slot;
  slot.reserve(pc.size());
  std::vector<Eigen::Vector3d> sums;
  std::vector<double> attr_sums;
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < pc.size(); ++i) {
    const Eigen::Vector3d& p = pc.points[i];
    VoxelKey key{static_cast<std::int64_t>(std::floor(p.x() / voxel)),
                 static_cast<std::int64_t>(std::floor(p.y() / voxel)),
                 static_cast<std::int64_t>(std::floor(p.z() / voxel))};
    auto [it, inserted] = slot.try_emplace(key, sums.size());
    if (inserted) {
      sums.push_back(Eigen::Vector3d::Zero());
      counts.push_back(0);
      attr_sums.resize(attr_sums.size() + dim, 0.0);
    }
    std::size_t s = it->second;
    sums[s] += p;
    counts[s] += 1;
    for (std::size_t c = 0; c < dim; ++c) attr_sums[s * dim + c] += pc.attributes[i * dim + c];
  }
  PointCloud out;
  out.attribute_dim = dim;
  out.points.resize(sums.size());
  out.attributes.resize(attr_sums.size());
  for (std::size_t s = 0; s < sums.size(); ++s) {
    out.points[s] = sums[s] / static_cast<double>(counts[s]);
    for (std::size_t c = 0; c < dim; ++c)
      out.attributes[s * dim + c] = attr_sums[s * dim + c] / static_cast<double>(counts[s]);
  }
  return out;
}

PointCloud crop(const PointCloud& pc, const CropBox& box) {
  PointCloud out;
  out.attribute_dim = pc.attribute_dim;
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (!box.contains(pc.points[i])) continue;
    out.points.push_back(pc.points[i]);
    for (std::size_t c = 0; c < pc.attribute_dim; ++c)
      out.attributes.push_back(pc.attributes[i * pc.attribute_dim + c]);
  }
  return out;
}

CoordGrid pool_reference_coords(const OrganizedCloud& cloud, int h, int w) {
  if (h <= 0 || w <= 0 || h > cloud.height || w > cloud.width)
    throw DimensionError("pool_reference_coords: target size must be within source size");
  CoordGrid out;
  out.height = h;
  out.width = w;
  out.coords.resize(static_cast<std::size_t>(h) * w, Eigen::Vector3d::Zero());
  out.valid.resize(static_cast<std::size_t>(h) * w, 0);
  for (int i = 0; i < h; ++i) {
    int y0 = (i * cloud.height) / h;
    int y1 = ((i + 1) * cloud.height + h - 1) / h;  // ceil
    for (int j = 0; j < w; ++j) {
      int x0 = (j * cloud.width) / w;
      int x1 = ((j + 1) * cloud.width + w - 1) / w;
      Eigen::Vector3d sum = Eigen::Vector3d::Zero();
      std::size_t count = 0;
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          if (!cloud.valid_at(x, y)) continue;
          sum += cloud.at(x, y);
          ++count;
        }
      }
      std::size_t idx = static_cast<std::size_t>(i) * w + j;
      if (count > 0) {
        out.coords[idx] = sum / static_cast<double>(count);
        out.valid[idx] = 1;
      }
    }
  }
  return out;
}

KnnResult knn(const Eigen::Vector3d& query, std::span<const Eigen::Vector3d> refs, std::size_t m) {
  if (refs.empty()) throw DataError("knn: reference set is empty");
  if (m < 1) throw DataError("knn: m must be at least 1");
  m = std::min(m, refs.size());
  std::vector<std::size_t> order(refs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> d2(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) d2[i] = (refs[i] - query).squaredNorm();
  std::partial_sort(order.begin(), order.begin() + m, order.end(), [&](std::size_t a, std::size_t b) {
    if (d2[a] != d2[b]) return d2[a] < d2[b];
    return a < b;
  });
  KnnResult out;
  out.indices.assign(order.begin(), order.begin() + m);
  out.distances.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.distances[i] = std::sqrt(d2[out.indices[i]]);
  return out;
}

}  // namespace exoadapt

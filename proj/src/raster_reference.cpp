#include <cmath>

#include "exoadapt/error.hpp"
#include "exoadapt/raster.hpp"
#include "raster_detail.hpp"

namespace exoadapt::reference {

RenderOutput render(const SceneModel& model, std::span<const JointState> q,
                    const CameraIntrinsics& k, int supersample) {
  validate_intrinsics(k);
  if (supersample < 1) throw ConfigError("render: supersample must be >= 1");
  const int s = supersample;

  RenderOutput out;
  out.mask = Image<double>(k.width, k.height, 0.0);
  out.depth = Image<double>(k.width, k.height, detail::kInf);

  std::vector<detail::PosedPrimitive> prims = detail::pose_scene(model, q);
  if (prims.empty()) return out;

  std::vector<double> dir_x, dir_y;
  detail::subray_tables(k, s, dir_x, dir_y);

  const double inv_n = 1.0 / (static_cast<double>(s) * s);
  for (int py = 0; py < k.height; ++py) {
    for (int px = 0; px < k.width; ++px) {
      int hits = 0;
      double depth_sum = 0.0;
      for (int j = 0; j < s; ++j) {
        for (int i = 0; i < s; ++i) {
          Eigen::Vector3d d(dir_x[px * s + i], dir_y[py * s + j], 1.0);
          double best = detail::kInf;
          for (const detail::PosedPrimitive& p : prims) {
            double t = detail::intersect(p, d);
            if (t < best) best = t;
          }
          if (best == detail::kInf) continue;
          ++hits;
          depth_sum += best;
        }
      }
      if (hits == 0) continue;
      out.mask.at(px, py) = hits * inv_n;
      out.depth.at(px, py) = depth_sum / hits;
    }
  }
  return out;
}

}  // namespace exoadapt::reference

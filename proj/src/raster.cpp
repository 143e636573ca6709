#include "exoadapt/raster.hpp"

#include <algorithm>
#include <cmath>

#include "exoadapt/error.hpp"
#include "raster_detail.hpp"

namespace exoadapt {

namespace detail {

std::vector<PosedPrimitive> pose_scene(const SceneModel& model, std::span<const JointState> q) {
  if (model.chains.size() != model.base_poses.size() || model.chains.size() != q.size())
    throw DimensionError("render: chain, base pose and joint state counts must match");
  std::vector<PosedPrimitive> prims;
  int link_id = 0;
  for (std::size_t c = 0; c < model.chains.size(); ++c) {
    const KinematicChain& chain = model.chains[c];
    if (chain.link_geometry.size() != chain.joint_count())
      throw ConfigError("render: chain is missing link geometry");
    FkResult fk = forward_kinematics(chain, q[c]);
    for (std::size_t l = 0; l < chain.joint_count(); ++l, ++link_id) {
      Pose link_world = compose(model.base_poses[c], fk.link_poses[l]);
      for (const PrimitiveShape& shape : chain.link_geometry[l]) {
        Pose world = compose(link_world, shape.local);
        PosedPrimitive p;
        p.kind = shape.kind;
        p.radius = shape.radius;
        p.link_id = link_id;
        switch (shape.kind) {
          case ShapeKind::sphere:
            p.a = world.translation;
            p.bound_center = p.a;
            p.bound_radius = shape.radius;
            break;
          case ShapeKind::capsule: {
            Eigen::Vector3d z = world.rotation.col(2);
            p.a = world.translation - shape.half_length * z;
            p.b = world.translation + shape.half_length * z;
            p.axis = z;
            p.seg_len = 2.0 * shape.half_length;
            p.bound_center = world.translation;
            p.bound_radius = shape.half_length + shape.radius;
            break;
          }
          case ShapeKind::box:
            p.a = world.translation;
            p.rot = world.rotation;
            p.half = shape.half_extents;
            p.bound_center = p.a;
            p.bound_radius = shape.half_extents.norm();
            break;
        }
        prims.push_back(p);
      }
    }
  }
  return prims;
}

double ray_sphere(const Eigen::Vector3d& d, const Eigen::Vector3d& c, double r) {
  double dd = d.squaredNorm();
  double dc = d.dot(c);
  double disc = dc * dc - dd * (c.squaredNorm() - r * r);
  if (disc < 0) return kInf;
  double s = std::sqrt(disc);
  double t = (dc - s) / dd;
  if (t > 0) return t;
  t = (dc + s) / dd;
  return t > 0 ? t : kInf;
}

namespace {

double ray_capsule(const Eigen::Vector3d& d, const PosedPrimitive& p) {
  double best = kInf;
  // infinite cylinder around the segment axis, hits clipped to the segment
  Eigen::Vector3d dp = d - d.dot(p.axis) * p.axis;
  Eigen::Vector3d mp = -p.a + p.a.dot(p.axis) * p.axis;  // origin - a, perpendicular part
  double qa = dp.squaredNorm();
  if (qa > 1e-300) {
    double qb = 2.0 * dp.dot(mp);
    double qc = mp.squaredNorm() - p.radius * p.radius;
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0) {
      double s = std::sqrt(disc);
      for (double t : {(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)}) {
        if (t <= 0 || t >= best) continue;
        double h = (t * d - p.a).dot(p.axis);
        if (h >= 0 && h <= p.seg_len) best = t;
      }
    }
  }
  best = std::min(best, ray_sphere(d, p.a, p.radius));
  best = std::min(best, ray_sphere(d, p.b, p.radius));
  return best;
}

double ray_box(const Eigen::Vector3d& d, const PosedPrimitive& p) {
  Eigen::Vector3d o = p.rot.transpose() * (-p.a);
  Eigen::Vector3d dl = p.rot.transpose() * d;
  double t0 = -kInf, t1 = kInf;
  for (int ax = 0; ax < 3; ++ax) {
    if (std::abs(dl[ax]) < 1e-300) {
      if (std::abs(o[ax]) > p.half[ax]) return kInf;
      continue;
    }
    double inv = 1.0 / dl[ax];
    double ta = (-p.half[ax] - o[ax]) * inv;
    double tb = (p.half[ax] - o[ax]) * inv;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return kInf;
  }
  if (t1 <= 0) return kInf;
  return t0 > 0 ? t0 : t1;
}

}  // namespace

double intersect(const PosedPrimitive& p, const Eigen::Vector3d& d) {
  switch (p.kind) {
    case ShapeKind::sphere:
      return ray_sphere(d, p.a, p.radius);
    case ShapeKind::capsule:
      return ray_capsule(d, p);
    case ShapeKind::box:
      return ray_box(d, p);
  }
  return kInf;
}

Eigen::Vector3d surface_normal(const PosedPrimitive& p, const Eigen::Vector3d& hit) {
  switch (p.kind) {
    case ShapeKind::sphere:
      return (hit - p.a).normalized();
    case ShapeKind::capsule: {
      double h = std::clamp((hit - p.a).dot(p.axis), 0.0, p.seg_len);
      return (hit - (p.a + h * p.axis)).normalized();
    }
    case ShapeKind::box: {
      Eigen::Vector3d local = p.rot.transpose() * (hit - p.a);
      int best_ax = 0;
      double best_ratio = -1;
      for (int ax = 0; ax < 3; ++ax) {
        double ratio = std::abs(local[ax]) / p.half[ax];
        if (ratio > best_ratio) {
          best_ratio = ratio;
          best_ax = ax;
        }
      }
      return (local[best_ax] >= 0 ? 1.0 : -1.0) * p.rot.col(best_ax);
    }
  }
  return Eigen::Vector3d::UnitZ();
}

void subray_tables(const CameraIntrinsics& k, int s, std::vector<double>& dir_x,
                   std::vector<double>& dir_y) {
  dir_x.resize(static_cast<std::size_t>(k.width) * s);
  dir_y.resize(static_cast<std::size_t>(k.height) * s);
  for (std::size_t gx = 0; gx < dir_x.size(); ++gx)
    dir_x[gx] = ((gx + 0.5) / s - 0.5 - k.cx) / k.fx;
  for (std::size_t gy = 0; gy < dir_y.size(); ++gy)
    dir_y[gy] = ((gy + 0.5) / s - 0.5 - k.cy) / k.fy;
}

std::vector<Eigen::Vector3d> link_shade_colors(const SceneModel& model) {
  static const Eigen::Vector3d palette[] = {
      {0.72, 0.72, 0.75}, {0.55, 0.57, 0.62}, {0.80, 0.78, 0.72},
      {0.45, 0.48, 0.55}, {0.65, 0.60, 0.55}, {0.58, 0.64, 0.66},
  };
  constexpr int kPaletteSize = 6;
  std::vector<Eigen::Vector3d> colors;
  int link_id = 0;
  for (std::size_t c = 0; c < model.chains.size(); ++c) {
    for (std::size_t l = 0; l < model.chains[c].joint_count(); ++l, ++link_id) {
      if (c < model.link_colors.size() && l < model.link_colors[c].size())
        colors.push_back(model.link_colors[c][l]);
      else
        colors.push_back(palette[link_id % kPaletteSize]);
    }
  }
  return colors;
}

Eigen::Vector3d shade(const Eigen::Vector3d& base_color, const Eigen::Vector3d& normal) {
  static const Eigen::Vector3d kLightDir = Eigen::Vector3d(0.35, -0.65, -0.55).normalized();
  constexpr double kAmbient = 0.35;
  double lambert = std::max(0.0, normal.dot(-kLightDir));
  return (kAmbient + (1.0 - kAmbient) * lambert) * base_color;
}

}  // namespace detail

namespace {

using detail::kInf;
using detail::PosedPrimitive;

struct SubrayRect {
  int x0 = 0, x1 = -1, y0 = 0, y1 = -1;  // inclusive bounds, empty when x1 < x0
  bool empty() const { return x1 < x0 || y1 < y0; }
};

SubrayRect screen_rect(const PosedPrimitive& p, const CameraIntrinsics& k, int s) {
  const int wmax = k.width * s - 1;
  const int hmax = k.height * s - 1;
  constexpr double kNear = 1e-4;
  double z_near = p.bound_center.z() - p.bound_radius;
  double z_far = p.bound_center.z() + p.bound_radius;
  if (z_far <= kNear) return SubrayRect{};  // entirely behind the camera
  if (z_near <= kNear) return SubrayRect{0, wmax, 0, hmax};
  auto lo = [&](double a) { return a >= 0 ? a / z_far : a / z_near; };
  auto hi = [&](double a) { return a >= 0 ? a / z_near : a / z_far; };
  double u_min = k.cx + k.fx * lo(p.bound_center.x() - p.bound_radius);
  double u_max = k.cx + k.fx * hi(p.bound_center.x() + p.bound_radius);
  double v_min = k.cy + k.fy * lo(p.bound_center.y() - p.bound_radius);
  double v_max = k.cy + k.fy * hi(p.bound_center.y() + p.bound_radius);
  SubrayRect r;
  r.x0 = std::clamp(static_cast<int>(std::floor((u_min + 0.5) * s - 0.5)) - 1, 0, wmax);
  r.x1 = std::clamp(static_cast<int>(std::ceil((u_max + 0.5) * s - 0.5)) + 1, 0, wmax);
  r.y0 = std::clamp(static_cast<int>(std::floor((v_min + 0.5) * s - 0.5)) - 1, 0, hmax);
  r.y1 = std::clamp(static_cast<int>(std::ceil((v_max + 0.5) * s - 0.5)) + 1, 0, hmax);
  if (u_max < -1 || u_min > k.width || v_max < -1 || v_min > k.height) return SubrayRect{};
  return r;
}

// Per-thread sub-ray buffers, generation-stamped so renders skip the clear.
struct Scratch {
  std::vector<double> depth;
  std::vector<std::int32_t> winner;
  std::vector<std::uint32_t> stamp;
  std::uint32_t gen = 0;
  std::size_t size = 0;

  void prepare(std::size_t n, bool want_winner) {
    if (n != size || (want_winner && winner.size() != n)) {
      depth.assign(n, kInf);
      stamp.assign(n, 0);
      if (want_winner) winner.assign(n, -1);
      size = n;
      gen = 0;
    }
    ++gen;
    if (gen == 0) {  // stamp wrap: reset
      std::fill(stamp.begin(), stamp.end(), 0);
      gen = 1;
    }
  }
};

thread_local Scratch tl_scratch;

struct RasterResult {
  Image<double> mask;
  Image<double> depth;
  ColorImage color;
};

RasterResult rasterize(const SceneModel& model, std::span<const JointState> q,
                       const CameraIntrinsics& k, int supersample, bool want_color) {
  validate_intrinsics(k);
  if (supersample < 1) throw ConfigError("render: supersample must be >= 1");
  const int s = supersample;
  const int ws = k.width * s, hs = k.height * s;

  RasterResult out;
  out.mask = Image<double>(k.width, k.height, 0.0);
  out.depth = Image<double>(k.width, k.height, kInf);
  if (want_color) out.color = ColorImage(k.width, k.height);

  std::vector<PosedPrimitive> prims = detail::pose_scene(model, q);
  if (prims.empty()) return out;

  std::vector<double> dir_x, dir_y;
  detail::subray_tables(k, s, dir_x, dir_y);

  std::vector<SubrayRect> rects(prims.size());
  SubrayRect united;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    rects[i] = screen_rect(prims[i], k, s);
    if (rects[i].empty()) continue;
    if (united.empty()) {
      united = rects[i];
    } else {
      united.x0 = std::min(united.x0, rects[i].x0);
      united.x1 = std::max(united.x1, rects[i].x1);
      united.y0 = std::min(united.y0, rects[i].y0);
      united.y1 = std::max(united.y1, rects[i].y1);
    }
  }
  if (united.empty()) return out;

  Scratch& scratch = tl_scratch;
  scratch.prepare(static_cast<std::size_t>(ws) * hs, want_color);
  const std::uint32_t gen = scratch.gen;
  double* depth_buf = scratch.depth.data();
  std::uint32_t* stamp_buf = scratch.stamp.data();
  std::int32_t* winner_buf = want_color ? scratch.winner.data() : nullptr;

#pragma omp parallel for schedule(dynamic, 8)
  for (int gy = united.y0; gy <= united.y1; ++gy) {
    const double dy = dir_y[gy];
    for (std::size_t pi = 0; pi < prims.size(); ++pi) {
      const SubrayRect& r = rects[pi];
      if (r.empty() || gy < r.y0 || gy > r.y1) continue;
      const PosedPrimitive& p = prims[pi];
      for (int gx = r.x0; gx <= r.x1; ++gx) {
        Eigen::Vector3d d(dir_x[gx], dy, 1.0);
        double t = detail::intersect(p, d);
        if (t == kInf) continue;
        std::size_t idx = static_cast<std::size_t>(gy) * ws + gx;
        if (stamp_buf[idx] != gen) {
          stamp_buf[idx] = gen;
          depth_buf[idx] = t;
          if (winner_buf) winner_buf[idx] = static_cast<std::int32_t>(pi);
        } else if (t < depth_buf[idx]) {
          depth_buf[idx] = t;
          if (winner_buf) winner_buf[idx] = static_cast<std::int32_t>(pi);
        }
      }
    }
  }

  std::vector<Eigen::Vector3d> colors;
  if (want_color) colors = detail::link_shade_colors(model);

  const int px0 = united.x0 / s, px1 = united.x1 / s;
  const int py0 = united.y0 / s, py1 = united.y1 / s;
  const double inv_n = 1.0 / (static_cast<double>(s) * s);
#pragma omp parallel for schedule(static)
  for (int py = py0; py <= py1; ++py) {
    for (int px = px0; px <= px1; ++px) {
      int hits = 0;
      double depth_sum = 0.0;
      Eigen::Vector3d color_sum = Eigen::Vector3d::Zero();
      for (int j = 0; j < s; ++j) {
        std::size_t row = static_cast<std::size_t>(py * s + j) * ws;
        for (int i = 0; i < s; ++i) {
          std::size_t idx = row + px * s + i;
          if (stamp_buf[idx] != gen || depth_buf[idx] == kInf) continue;
          ++hits;
          depth_sum += depth_buf[idx];
          if (winner_buf) {
            const PosedPrimitive& p = prims[winner_buf[idx]];
            double t = depth_buf[idx];
            Eigen::Vector3d hit(t * dir_x[px * s + i], t * dir_y[py * s + j], t);
            color_sum += detail::shade(colors[p.link_id], detail::surface_normal(p, hit));
          }
        }
      }
      if (hits == 0) continue;
      out.mask.at(px, py) = hits * inv_n;
      out.depth.at(px, py) = depth_sum / hits;
      if (want_color) {
        Eigen::Vector3d c = color_sum / hits;
        for (int ch = 0; ch < 3; ++ch)
          out.color.at(px, py, ch) =
              static_cast<std::uint8_t>(std::clamp(std::floor(c[ch] * 255.0 + 0.5), 0.0, 255.0));
      }
    }
  }
  return out;
}

}  // namespace

RenderOutput render(const SceneModel& model, std::span<const JointState> q,
                    const CameraIntrinsics& k, int supersample) {
  RasterResult r = rasterize(model, q, k, supersample, false);
  return RenderOutput{std::move(r.mask), std::move(r.depth)};
}

OverlayOutput render_robot_overlay(const SceneModel& model, std::span<const JointState> q,
                                   const CameraIntrinsics& k, int supersample) {
  RasterResult r = rasterize(model, q, k, supersample, true);
  return OverlayOutput{std::move(r.mask), std::move(r.depth), std::move(r.color)};
}

}  // namespace exoadapt

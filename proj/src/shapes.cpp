#include "exoadapt/shapes.hpp"

#include "exoadapt/error.hpp"

namespace exoadapt {

PrimitiveShape make_sphere(double radius, const Eigen::Vector3d& center) {
  if (radius <= 0) throw ConfigError("sphere radius must be positive");
  PrimitiveShape s;
  s.kind = ShapeKind::sphere;
  s.radius = radius;
  s.local.translation = center;
  return s;
}

PrimitiveShape make_box(const Eigen::Vector3d& half_extents, const Pose& local) {
  if ((half_extents.array() <= 0).any()) throw ConfigError("box half extents must be positive");
  PrimitiveShape s;
  s.kind = ShapeKind::box;
  s.half_extents = half_extents;
  s.local = local;
  return s;
}

PrimitiveShape make_capsule_between(const Eigen::Vector3d& p0, const Eigen::Vector3d& p1, double radius) {
  if (radius <= 0) throw ConfigError("capsule radius must be positive");
  Eigen::Vector3d seg = p1 - p0;
  double len = seg.norm();
  PrimitiveShape s;
  s.kind = ShapeKind::capsule;
  s.radius = radius;
  s.half_length = 0.5 * len;
  s.local.translation = 0.5 * (p0 + p1);
  if (len > 1e-12) {
    // rotate local z onto the segment direction
    Eigen::Vector3d z = seg / len;
    s.local.rotation = Eigen::Quaterniond::FromTwoVectors(Eigen::Vector3d::UnitZ(), z).toRotationMatrix();
  }
  return s;
}

}  // namespace exoadapt

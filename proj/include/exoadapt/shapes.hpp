#pragma once

#include <Eigen/Dense>

#include "exoadapt/pose.hpp"

namespace exoadapt {

enum class ShapeKind { sphere, capsule, box };

/// Primitive solid attached to a link, expressed in that link's frame.
///   sphere:  radius, centered at local origin
///   capsule: radius + half_length, segment along local z through the origin
///   box:     half_extents, axis-aligned in the local frame
struct PrimitiveShape {
  ShapeKind kind = ShapeKind::sphere;
  double radius = 0.0;
  double half_length = 0.0;
  Eigen::Vector3d half_extents = Eigen::Vector3d::Zero();
  Pose local;
};

PrimitiveShape make_sphere(double radius, const Eigen::Vector3d& center = Eigen::Vector3d::Zero());
PrimitiveShape make_box(const Eigen::Vector3d& half_extents, const Pose& local = Pose{});

/// Capsule spanning the segment [p0, p1] in the link frame.
PrimitiveShape make_capsule_between(const Eigen::Vector3d& p0, const Eigen::Vector3d& p1, double radius);

}  // namespace exoadapt

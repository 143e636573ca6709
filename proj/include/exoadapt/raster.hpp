#pragma once

#include <span>
#include <vector>

#include "exoadapt/geometry.hpp"
#include "exoadapt/image.hpp"
#include "exoadapt/kinematics.hpp"

namespace exoadapt {

/// One or two chains posed in the camera frame. `base_poses[i]` maps chain i's
/// base frame into the camera frame. `link_colors`, when non-empty, provides
/// one RGB triple (0..1) per link per chain for flat-shaded overlays.
struct SceneModel {
  std::vector<KinematicChain> chains;
  std::vector<Pose> base_poses;
  std::vector<std::vector<Eigen::Vector3d>> link_colors;
};

/// Soft coverage mask in [0,1] plus a depth buffer holding the camera-frame
/// z coordinate of the nearest hit (meters, +inf where nothing was hit).
struct RenderOutput {
  Image<double> mask;
  Image<double> depth;
};

struct OverlayOutput {
  Image<double> mask;
  Image<double> depth;
  ColorImage color;  // flat-shaded links, black where no hit
};

/// Ray-cast render of all chain link primitives posed by forward kinematics.
/// Each pixel is sampled with supersample^2 sub-rays through sub-pixel
/// centers; mask = hit fraction, depth = mean z over hitting sub-rays.
/// Pixel index (u,v) samples screen position (u,v) at supersample 1.
RenderOutput render(const SceneModel& model, std::span<const JointState> q,
                    const CameraIntrinsics& k, int supersample);

/// As render, plus a flat-shaded color image (per-link base color with a
/// Lambert term from a fixed directional light), averaged over hitting
/// sub-rays. Mask and depth are bit-identical to render at equal
/// supersampling.
OverlayOutput render_robot_overlay(const SceneModel& model, std::span<const JointState> q,
                                   const CameraIntrinsics& k, int supersample = 4);

namespace reference {

/// Serial per-pixel renderer without screen-space culling. Kept as the
/// plain-loop counterpart of render(); outputs are bit-identical.
RenderOutput render(const SceneModel& model, std::span<const JointState> q,
                    const CameraIntrinsics& k, int supersample);

}  // namespace reference

}  // namespace exoadapt

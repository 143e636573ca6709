#pragma once

#include <Eigen/Dense>
#include <array>

namespace exoadapt {

/// Six scalars holding the first two columns of a rotation matrix,
/// column-major: (R00, R10, R20, R01, R11, R21).
using Rot6D = std::array<double, 6>;

/// Rigid transform. Rotation must stay orthonormal with det +1; validity is
/// checked at I/O boundaries, not on every operation.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return Pose{}; }

  Eigen::Matrix4d matrix() const;
  static Pose from_matrix(const Eigen::Matrix4d& m);

  bool is_valid(double tol = 1e-9) const;
};

inline Pose compose(const Pose& a, const Pose& b) {
  return Pose{a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

inline Pose inverse(const Pose& p) {
  Eigen::Matrix3d rt = p.rotation.transpose();
  return Pose{rt, -(rt * p.translation)};
}

inline Eigen::Vector3d apply(const Pose& p, const Eigen::Vector3d& v) {
  return p.rotation * v + p.translation;
}

/// Gram-Schmidt decode of the 6D rotation representation.
/// Throws DegeneracyError when the first column is (near) zero or the two
/// columns are (near) parallel.
Eigen::Matrix3d rot6d_to_rotmat(const Rot6D& r);

Rot6D rotmat_to_rot6d(const Eigen::Matrix3d& rot);

}  // namespace exoadapt

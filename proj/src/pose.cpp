#include "exoadapt/pose.hpp"

#include <cmath>

#include "exoadapt/error.hpp"

namespace exoadapt {

Eigen::Matrix4d Pose::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = rotation;
  m.topRightCorner<3, 1>() = translation;
  return m;
}

Pose Pose::from_matrix(const Eigen::Matrix4d& m) {
  return Pose{m.topLeftCorner<3, 3>(), m.topRightCorner<3, 1>()};
}

bool Pose::is_valid(double tol) const {
  if (!rotation.allFinite() || !translation.allFinite()) return false;
  Eigen::Matrix3d err = rotation.transpose() * rotation - Eigen::Matrix3d::Identity();
  if (err.cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(rotation.determinant() - 1.0) <= tol;
}

Eigen::Matrix3d rot6d_to_rotmat(const Rot6D& r) {
  constexpr double kEps = 1e-12;
  Eigen::Vector3d a(r[0], r[1], r[2]);
  Eigen::Vector3d b(r[3], r[4], r[5]);
  double na = a.norm();
  if (na < kEps) throw DegeneracyError("rot6d_to_rotmat: first column is zero");
  Eigen::Vector3d b1 = a / na;
  Eigen::Vector3d u2 = b - b1.dot(b) * b1;
  double nu = u2.norm();
  if (nu < kEps) throw DegeneracyError("rot6d_to_rotmat: columns are parallel");
  Eigen::Vector3d b2 = u2 / nu;
  Eigen::Vector3d b3 = b1.cross(b2);
  Eigen::Matrix3d rot;
  rot.col(0) = b1;
  rot.col(1) = b2;
  rot.col(2) = b3;
  return rot;
}

Rot6D rotmat_to_rot6d(const Eigen::Matrix3d& rot) {
  return {rot(0, 0), rot(1, 0), rot(2, 0), rot(0, 1), rot(1, 1), rot(2, 1)};
}

}  // namespace exoadapt

#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "mlk/common.hpp"

namespace mlk::geom {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Vec12 = Eigen::Matrix<double, 12, 1>;

// Unit quaternion, storage order (w, x, y, z).
// Canonical form has w >= 0; when w == 0 the first nonzero of (x, y, z) is positive.
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Quaternion identity() { return {}; }

  double norm() const;
  Quaternion normalized() const;
  Quaternion canonicalized() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  double dot(const Quaternion& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }
  Quaternion operator*(const Quaternion& o) const;  // Hamilton product
  Vec3 rotate(const Vec3& v) const;
};

// World-to-camera rigid transform: x_cam = R * x_world + t.
struct Pose {
  Quaternion rotation;
  Vec3 translation = Vec3::Zero();

  static Pose identity() { return {}; }
  Vec3 center() const;  // camera center in world coordinates, -R^T t
};

// Similarity transform x -> scale * R * x + t with scale > 0.
struct Sim3 {
  double scale = 1.0;
  Quaternion rotation;
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const;
};

// Requires |q| = 1 within 1e-6.
Mat3 quat_to_rot(const Quaternion& q);

// Requires R orthonormal with det +1 within 1e-6. Result is canonical.
Quaternion rot_to_quat(const Mat3& r);

// compose(a, b) applies b first, then a; equals the 4x4 product H(a) * H(b).
Pose compose(const Pose& a, const Pose& b);
Pose inverse(const Pose& p);

// Pose of b expressed in a's camera frame: T_b ∘ T_a⁻¹.
// compose(relative_pose(a, b), a) reproduces b.
Pose relative_pose(const Pose& a, const Pose& b);

// Geodesic angle arccos((trace(Ra^T Rb) - 1) / 2) in degrees, clamped to [0, 180].
double rotation_angle_error_deg(const Mat3& ra, const Mat3& rb);
double rotation_angle_error_deg(const Quaternion& qa, const Quaternion& qb);

inline constexpr double kTranslationDirEps = 1e-9;

// Angle between directions in degrees. Both norms below kTranslationDirEps
// give 0; exactly one below gives 180.
double translation_angle_error_deg(const Vec3& ta, const Vec3& tb);

// Row-major [R | t]: nine rotation entries then the translation.
Vec12 flatten_pose(const Pose& p);
Pose unflatten_pose(const Vec12& v);

// Divides every translation by the mean camera-center norm s and returns
// (scaled poses, s). A mean below 1e-9 leaves the poses unchanged with s = 1.
std::pair<std::vector<Pose>, double> normalize_poses(const std::vector<Pose>& poses);

Mat4 pose_matrix(const Pose& p);

}  // namespace mlk::geom

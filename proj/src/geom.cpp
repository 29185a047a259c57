#include "mlk/geom.hpp"

#include <algorithm>
#include <cmath>

namespace mlk::geom {

namespace {
constexpr double kRadToDeg = 180.0 / M_PI;
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n < 1e-300) {
    throw PreconditionError("cannot normalize a zero quaternion");
  }
  return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::canonicalized() const {
  Quaternion q = normalized();
  bool flip = q.w < 0.0;
  if (q.w == 0.0) {
    if (q.x != 0.0) {
      flip = q.x < 0.0;
    } else if (q.y != 0.0) {
      flip = q.y < 0.0;
    } else {
      flip = q.z < 0.0;
    }
  }
  if (flip) {
    q = {-q.w, -q.x, -q.y, -q.z};
  }
  return q;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {w * o.w - x * o.x - y * o.y - z * o.z,
          w * o.x + x * o.w + y * o.z - z * o.y,
          w * o.y - x * o.z + y * o.w + z * o.x,
          w * o.z + x * o.y - y * o.x + z * o.w};
}

Vec3 Quaternion::rotate(const Vec3& v) const {
  // v' = v + 2w (u × v) + 2 u × (u × v) with u = (x, y, z)
  const Vec3 u(x, y, z);
  const Vec3 uv = u.cross(v);
  return v + 2.0 * (w * uv + u.cross(uv));
}

Vec3 Pose::center() const { return -rotation.conjugate().rotate(translation); }

Vec3 Sim3::apply(const Vec3& p) const { return scale * rotation.rotate(p) + translation; }

Mat3 quat_to_rot(const Quaternion& q) {
  if (std::abs(q.norm() - 1.0) > 1e-6) {
    throw PreconditionError("quat_to_rot requires a unit quaternion");
  }
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Mat3 r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

Quaternion rot_to_quat(const Mat3& r) {
  if ((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-6 ||
      std::abs(r.determinant() - 1.0) > 1e-6) {
    throw PreconditionError("rot_to_quat requires an orthonormal matrix with det +1");
  }
  // Shepperd's method: pick the largest of (trace, r00, r11, r22).
  Quaternion q;
  const double tr = r.trace();
  if (tr > r(0, 0) && tr > r(1, 1) && tr > r(2, 2)) {
    const double s = std::sqrt(tr + 1.0) * 2.0;
    q.w = 0.25 * s;
    q.x = (r(2, 1) - r(1, 2)) / s;
    q.y = (r(0, 2) - r(2, 0)) / s;
    q.z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    const double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
    q.w = (r(2, 1) - r(1, 2)) / s;
    q.x = 0.25 * s;
    q.y = (r(0, 1) + r(1, 0)) / s;
    q.z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) > r(2, 2)) {
    const double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
    q.w = (r(0, 2) - r(2, 0)) / s;
    q.x = (r(0, 1) + r(1, 0)) / s;
    q.y = 0.25 * s;
    q.z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
    q.w = (r(1, 0) - r(0, 1)) / s;
    q.x = (r(0, 2) + r(2, 0)) / s;
    q.y = (r(1, 2) + r(2, 1)) / s;
    q.z = 0.25 * s;
  }
  return q.canonicalized();
}

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = (a.rotation * b.rotation).normalized();
  out.translation = a.rotation.rotate(b.translation) + a.translation;
  return out;
}

Pose inverse(const Pose& p) {
  Pose out;
  out.rotation = p.rotation.conjugate();
  out.translation = -out.rotation.rotate(p.translation);
  return out;
}

Pose relative_pose(const Pose& a, const Pose& b) { return compose(b, inverse(a)); }

double rotation_angle_error_deg(const Mat3& ra, const Mat3& rb) {
  const double c = std::clamp(((ra.transpose() * rb).trace() - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c) * kRadToDeg;
}

double rotation_angle_error_deg(const Quaternion& qa, const Quaternion& qb) {
  return rotation_angle_error_deg(quat_to_rot(qa.normalized()), quat_to_rot(qb.normalized()));
}

double translation_angle_error_deg(const Vec3& ta, const Vec3& tb) {
  const double na = ta.norm();
  const double nb = tb.norm();
  const bool za = na < kTranslationDirEps;
  const bool zb = nb < kTranslationDirEps;
  if (za && zb) return 0.0;
  if (za != zb) return 180.0;
  const Vec3 a = ta / na;
  const Vec3 b = tb / nb;
  return std::atan2(a.cross(b).norm(), a.dot(b)) * kRadToDeg;
}

Vec12 flatten_pose(const Pose& p) {
  const Mat3 r = quat_to_rot(p.rotation.normalized());
  Vec12 v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(i * 3 + j) = r(i, j);
  v.tail<3>() = p.translation;
  return v;
}

Pose unflatten_pose(const Vec12& v) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = v(i * 3 + j);
  Pose p;
  p.rotation = rot_to_quat(r);
  p.translation = v.tail<3>();
  return p;
}

std::pair<std::vector<Pose>, double> normalize_poses(const std::vector<Pose>& poses) {
  if (poses.empty()) {
    throw PreconditionError("normalize_poses requires a nonempty list");
  }
  double s = 0.0;
  for (const Pose& p : poses) s += p.center().norm();
  s /= static_cast<double>(poses.size());
  if (s < 1e-9) {
    return {poses, 1.0};
  }
  std::vector<Pose> out = poses;
  for (Pose& p : out) p.translation /= s;
  return {std::move(out), s};
}

Mat4 pose_matrix(const Pose& p) {
  Mat4 h = Mat4::Identity();
  h.topLeftCorner<3, 3>() = quat_to_rot(p.rotation.normalized());
  h.topRightCorner<3, 1>() = p.translation;
  return h;
}

}  // namespace mlk::geom

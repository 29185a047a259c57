#pragma once

#include <cstddef>
#include <vector>

#include "mlk/geom.hpp"

namespace mlk::scale_recovery {

using geom::Mat3;
using geom::Pose;
using geom::Quaternion;
using geom::Sim3;
using geom::Vec3;

// Half-line in world coordinates; direction is unit within 1e-12.
struct Ray {
  Vec3 origin;
  Vec3 direction;
};

enum class ScaleMethod { motion_averaging, umeyama };

struct AbsolutePoseEstimate {
  Pose pose;  // world frame, metric scale
  ScaleMethod method = ScaleMethod::motion_averaging;
  int num_candidates = 0;  // references that actually constrained the estimate
  double residual = 0.0;   // mean point-to-ray distance / mean alignment residual
};

// One ray per usable reference: origin at the reference camera center,
// pointing along the world-frame direction of the query center implied by
// rel_poses[i]. Only the direction of the relative translation enters;
// references with translation norm below 1e-9 are skipped. Throws
// DegenerateGeometry when every ray is skipped.
std::vector<Ray> query_rays(const std::vector<Pose>& ref_poses,
                            const std::vector<Pose>& rel_poses);

double point_to_ray_distance(const Vec3& p, const Ray& ray);

// Least-squares intersection: minimizes sum_i |(I - d_i d_i^T)(x - o_i)|^2
// via the 3x3 normal equations. Throws DegenerateGeometry for fewer than two
// rays or a near-parallel bundle (condition number above 1e12).
Vec3 triangulate_point(const std::vector<Ray>& rays);

// Geodesic medoid: the candidate minimizing the summed geodesic angle to all
// other candidates. Ties resolve to the lowest index.
std::size_t median_rotation_index(const std::vector<Quaternion>& candidates);
Quaternion median_rotation(const std::vector<Quaternion>& candidates);

// Translation by ray triangulation, rotation by the medoid of the
// per-candidate absolute rotations rel_i * ref_i.
AbsolutePoseEstimate absolute_pose_motion_avg(const std::vector<Pose>& ref_poses,
                                              const std::vector<Pose>& rel_poses);

// Least-squares similarity fit dst_i ~ s * R * src_i + t with the
// determinant-sign correction. Throws DegenerateGeometry for fewer than three
// points or a rank-deficient (collinear) point set.
Sim3 umeyama_sim3(const std::vector<Vec3>& src, const std::vector<Vec3>& dst);

// Fits a Sim3 from the predicted reference centers (model's relative frame)
// to the true reference centers, then maps the predicted query pose through it.
AbsolutePoseEstimate absolute_pose_umeyama(
    const std::vector<Pose>& ref_poses,
    const std::vector<Pose>& predicted_ref_poses_relative_frame,
    const Pose& predicted_query_pose_relative_frame);

}  // namespace mlk::scale_recovery

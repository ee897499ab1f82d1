#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "mwreg/error.hpp"
#include "mwreg/pointcloud.hpp"
#include "mwreg/rng.hpp"

namespace mwreg {

/// A rotation matrix constrained to SO(3). Construction through from_matrix
/// checks the orthonormality and determinant invariants (Frobenius tolerance
/// 1e-9); operations closed on the manifold skip the check. renormalized()
/// pulls a drifted matrix back onto SO(3) for long accumulation chains.
class Rotation3 {
 public:
  Rotation3() : m_(Eigen::Matrix3d::Identity()) {}

  /// Checked construction; throws InvalidRotation if m is off-manifold.
  static Rotation3 from_matrix(const Eigen::Matrix3d& m);

  static Rotation3 identity() { return Rotation3(); }
  static Rotation3 rot_x(double angle);
  static Rotation3 rot_y(double angle);
  static Rotation3 rot_z(double angle);
  static Rotation3 from_axis_angle(const Eigen::Vector3d& axis, double angle);

  /// Exponential map: rotation vector (axis * angle) to rotation matrix.
  static Rotation3 exp(const Eigen::Vector3d& omega);

  /// Uniformly distributed random rotation (via normalized quaternion).
  static Rotation3 random(Rng& rng);

  /// Logarithm map: rotation vector with angle in [0, pi].
  Eigen::Vector3d log() const;

  const Eigen::Matrix3d& matrix() const { return m_; }

  Rotation3 transposed() const { return Rotation3(m_.transpose(), unchecked_t{}); }

  /// Nearest rotation under the Frobenius norm (SVD projection).
  Rotation3 renormalized() const;

  Rotation3 operator*(const Rotation3& rhs) const {
    return Rotation3(m_ * rhs.m_, unchecked_t{});
  }
  Eigen::Vector3d operator*(const Eigen::Vector3d& v) const { return m_ * v; }

  /// Max violation of the SO(3) invariants: max(|R^T R - I|_F, |det - 1|).
  double manifold_error() const;

 private:
  struct unchecked_t {};
  Rotation3(const Eigen::Matrix3d& m, unchecked_t) : m_(m) {}

  Eigen::Matrix3d m_;

  friend Rotation3 gram_schmidt_project(const Eigen::Matrix<double, 3, 2>&);
  friend Rotation3 procrustes_project(const Eigen::Matrix3d&);
};

/// An SE(3) element: rotation plus translation in meters. The homogeneous
/// form is 4x4 with bottom row (0, 0, 0, 1).
struct RigidTransform {
  Rotation3 rotation;
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  RigidTransform() = default;
  RigidTransform(Rotation3 r, Eigen::Vector3d t)
      : rotation(r), translation(std::move(t)) {}

  static RigidTransform identity() { return RigidTransform(); }

  Eigen::Matrix4d homogeneous() const;
  static RigidTransform from_homogeneous(const Eigen::Matrix4d& m);
};

/// Ordered list of poses mapping each cloud into the shared reference frame;
/// poses[0] is the identity when anchored to the first scan.
using PoseSet = std::vector<RigidTransform>;

// ---------------------------------------------------------------------------
// Rotation parametrizations
// ---------------------------------------------------------------------------

/// Projects a 3x2 feature block onto SO(3) by Gram-Schmidt orthonormalization:
/// b1 = normalize(w e1), b2 = normalize(w e2 - (b1 . w e2) b1), b3 = b1 x b2.
/// Throws DegenerateInput when a column norm is below 1e-12 or the columns
/// are parallel within 1e-7 rad (sine of the enclosed angle).
Rotation3 gram_schmidt_project(const Eigen::Matrix<double, 3, 2>& w);

/// Nearest rotation to an arbitrary full-rank 3x3 matrix under the Frobenius
/// norm: R = U diag(1, 1, det(U V^T)) V^T with w = U S V^T. Throws
/// DegenerateInput when the smallest singular value is below 1e-12.
Rotation3 procrustes_project(const Eigen::Matrix3d& w);

/// Geodesic angle between two rotations in [0, pi], computed as
/// 2 asin(|ra - rb|_F / (2 sqrt(2))) with the ratio clamped to [0, 1].
double angular_distance(const Rotation3& ra, const Rotation3& rb);

// ---------------------------------------------------------------------------
// SE(3) arithmetic
// ---------------------------------------------------------------------------

RigidTransform compose(const RigidTransform& a, const RigidTransform& b);
RigidTransform inverse(const RigidTransform& a);

/// relative(t_i, t_j) = t_i^-1 o t_j; its parts are the rotation/translation
/// deltas consumed by the training loss.
RigidTransform relative(const RigidTransform& t_i, const RigidTransform& t_j);

/// Transforms points and rotates normals; padding rows stay zero.
PointCloud apply(const RigidTransform& a, const PointCloud& cloud);

// ---------------------------------------------------------------------------
// Pose text format
// ---------------------------------------------------------------------------

/// One pose as 12 whitespace-separated decimals: the row-major upper 3x4 of
/// the homogeneous matrix. Values are printed with 17 significant digits so
/// that write -> parse -> write round-trips bit-exactly.
std::string format_pose_line(const RigidTransform& pose);

/// Parses a 12-value pose line into the raw 3x4 block (no manifold check).
/// Throws MalformedLine on any token or count mismatch.
Eigen::Matrix<double, 3, 4> parse_pose_line(const std::string& line);

}  // namespace mwreg

#include "mwreg/geom3d.hpp"

#include <Eigen/Geometry>
#include <Eigen/SVD>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mwreg {

namespace {
constexpr double kManifoldTol = 1e-9;
constexpr double kTwoSqrt2 = 2.8284271247461902909;  // 2 * sqrt(2)
}  // namespace

Rotation3 Rotation3::from_matrix(const Eigen::Matrix3d& m) {
  Rotation3 r(m, unchecked_t{});
  if (r.manifold_error() > kManifoldTol) {
    fail(ErrorCode::InvalidRotation,
         "matrix is off SO(3) by " + std::to_string(r.manifold_error()));
  }
  return r;
}

double Rotation3::manifold_error() const {
  const double ortho = (m_.transpose() * m_ - Eigen::Matrix3d::Identity()).norm();
  const double det = std::abs(m_.determinant() - 1.0);
  return std::max(ortho, det);
}

Rotation3 Rotation3::rot_x(double angle) {
  return Rotation3(Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitX()).toRotationMatrix(),
                   unchecked_t{});
}

Rotation3 Rotation3::rot_y(double angle) {
  return Rotation3(Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitY()).toRotationMatrix(),
                   unchecked_t{});
}

Rotation3 Rotation3::rot_z(double angle) {
  return Rotation3(Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitZ()).toRotationMatrix(),
                   unchecked_t{});
}

Rotation3 Rotation3::from_axis_angle(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (n < 1e-12) fail(ErrorCode::DegenerateInput, "zero rotation axis");
  return Rotation3(Eigen::AngleAxisd(angle, axis / n).toRotationMatrix(), unchecked_t{});
}

Rotation3 Rotation3::exp(const Eigen::Vector3d& omega) {
  const double angle = omega.norm();
  if (angle < 1e-12) {
    // First-order term keeps exp/log consistent near the identity.
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(0, 1) = -omega.z(); m(1, 0) = omega.z();
    m(0, 2) = omega.y();  m(2, 0) = -omega.y();
    m(1, 2) = -omega.x(); m(2, 1) = omega.x();
    return Rotation3(m, unchecked_t{}).renormalized();
  }
  return Rotation3(Eigen::AngleAxisd(angle, omega / angle).toRotationMatrix(), unchecked_t{});
}

Eigen::Vector3d Rotation3::log() const {
  const Eigen::AngleAxisd aa(m_);
  return aa.angle() * aa.axis();
}

Rotation3 Rotation3::random(Rng& rng) {
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q(i) = rng.gaussian();
  while (q.norm() < 1e-12) {
    for (int i = 0; i < 4; ++i) q(i) = rng.gaussian();
  }
  q.normalize();
  const Eigen::Quaterniond quat(q(0), q(1), q(2), q(3));
  return Rotation3(quat.toRotationMatrix(), unchecked_t{});
}

Rotation3 Rotation3::renormalized() const { return procrustes_project(m_); }

Eigen::Matrix4d RigidTransform::homogeneous() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = rotation.matrix();
  m.topRightCorner<3, 1>() = translation;
  return m;
}

RigidTransform RigidTransform::from_homogeneous(const Eigen::Matrix4d& m) {
  if ((m.row(3) - Eigen::RowVector4d(0, 0, 0, 1)).norm() > 1e-12) {
    fail(ErrorCode::DegenerateInput, "homogeneous bottom row is not (0,0,0,1)");
  }
  return RigidTransform(Rotation3::from_matrix(m.topLeftCorner<3, 3>()),
                        m.topRightCorner<3, 1>());
}

Rotation3 gram_schmidt_project(const Eigen::Matrix<double, 3, 2>& w) {
  const Eigen::Vector3d a = w.col(0);
  const Eigen::Vector3d b = w.col(1);
  const double na = a.norm();
  const double nb = b.norm();
  if (na < 1e-12 || nb < 1e-12) {
    fail(ErrorCode::DegenerateInput, "feature column norm below 1e-12");
  }
  // sin of the angle between the columns; covers parallel and anti-parallel.
  const double sin_angle = a.cross(b).norm() / (na * nb);
  if (sin_angle < 1e-7) {
    fail(ErrorCode::DegenerateInput, "feature columns parallel within 1e-7 rad");
  }
  const Eigen::Vector3d b1 = a / na;
  const Eigen::Vector3d u2 = b - b1.dot(b) * b1;
  const Eigen::Vector3d b2 = u2 / u2.norm();
  const Eigen::Vector3d b3 = b1.cross(b2);
  Eigen::Matrix3d m;
  m.col(0) = b1;
  m.col(1) = b2;
  m.col(2) = b3;
  return Rotation3(m, Rotation3::unchecked_t{});
}

Rotation3 procrustes_project(const Eigen::Matrix3d& w) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(w, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues()(2) < 1e-12) {
    fail(ErrorCode::DegenerateInput, "rank-deficient matrix, projection non-unique");
  }
  const Eigen::Matrix3d u = svd.matrixU();
  const Eigen::Matrix3d v = svd.matrixV();
  const double s = ((u * v.transpose()).determinant() > 0.0) ? 1.0 : -1.0;
  Eigen::Matrix3d m = u * Eigen::Vector3d(1.0, 1.0, s).asDiagonal() * v.transpose();
  return Rotation3(m, Rotation3::unchecked_t{});
}

double angular_distance(const Rotation3& ra, const Rotation3& rb) {
  const double fro = (ra.matrix() - rb.matrix()).norm();
  const double ratio = std::clamp(fro / kTwoSqrt2, 0.0, 1.0);
  return 2.0 * std::asin(ratio);
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  return RigidTransform(a.rotation * b.rotation,
                        a.rotation * b.translation + a.translation);
}

RigidTransform inverse(const RigidTransform& a) {
  const Rotation3 rt = a.rotation.transposed();
  return RigidTransform(rt, -(rt * a.translation));
}

RigidTransform relative(const RigidTransform& t_i, const RigidTransform& t_j) {
  return compose(inverse(t_i), t_j);
}

PointCloud apply(const RigidTransform& a, const PointCloud& cloud) {
  PointCloud out = cloud;
  const Eigen::Matrix3d r = a.rotation.matrix();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (!out.mask[i]) continue;
    out.points.row(i) = (r * cloud.points.row(i).transpose() + a.translation).transpose();
    if (out.normals) {
      out.normals->row(i) = (r * cloud.normals->row(i).transpose()).transpose();
    }
  }
  return out;
}

std::string format_pose_line(const RigidTransform& pose) {
  const Eigen::Matrix4d h = pose.homogeneous();
  std::string line;
  char buf[32];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", h(r, c));
      if (r != 0 || c != 0) line += ' ';
      line += buf;
    }
  }
  return line;
}

Eigen::Matrix<double, 3, 4> parse_pose_line(const std::string& line) {
  std::istringstream in(line);
  Eigen::Matrix<double, 3, 4> m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (!(in >> m(r, c))) {
        fail(ErrorCode::MalformedLine, "expected 12 decimals, got fewer or non-numeric");
      }
    }
  }
  std::string extra;
  if (in >> extra) {
    fail(ErrorCode::MalformedLine, "trailing token after 12 decimals: '" + extra + "'");
  }
  return m;
}

}  // namespace mwreg

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

namespace mwreg {

/// Points with optional per-point normals and a validity mask. Rows with
/// mask == 0 are padding: they hold all-zero coordinates and are excluded
/// from every computation downstream.
struct PointCloud {
  Eigen::MatrixX3d points;                    // meters
  std::optional<Eigen::MatrixX3d> normals;    // unit vectors on masked rows
  std::vector<std::uint8_t> mask;             // 1 = real point, 0 = padding

  PointCloud() : points(0, 3) {}

  explicit PointCloud(Eigen::MatrixX3d pts)
      : points(std::move(pts)), mask(points.rows(), 1) {}

  Eigen::Index size() const { return points.rows(); }

  Eigen::Index masked_count() const {
    Eigen::Index n = 0;
    for (std::uint8_t m : mask) n += (m != 0);
    return n;
  }

  bool has_normals() const { return normals.has_value(); }

  /// Indices of real (mask == 1) rows, ascending.
  std::vector<Eigen::Index> masked_indices() const {
    std::vector<Eigen::Index> idx;
    idx.reserve(mask.size());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(mask.size()); ++i) {
      if (mask[i]) idx.push_back(i);
    }
    return idx;
  }

  /// Copy with padding rows dropped.
  PointCloud compacted() const {
    const auto idx = masked_indices();
    PointCloud out;
    out.points.resize(idx.size(), 3);
    if (normals) out.normals.emplace(idx.size(), 3);
    out.mask.assign(idx.size(), 1);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      out.points.row(r) = points.row(idx[r]);
      if (normals) out.normals->row(r) = normals->row(idx[r]);
    }
    return out;
  }
};

}  // namespace mwreg

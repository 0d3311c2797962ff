#pragma once

#include <Eigen/Core>
#include <string>

namespace homotopica {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Semantic role carried by a matrix axis. Time-by-voxel is the library-wide
// orientation for observed data: time indexes rows, voxels index columns.
enum class AxisRole { Time, Component, Voxel, SubjectBlock };

const char* to_string(AxisRole role);
AxisRole axis_role_from_string(const std::string& s);

// Dense real matrix with declared row/column roles.
struct DataMatrix {
  Matrix values;
  AxisRole row_role = AxisRole::Time;
  AxisRole col_role = AxisRole::Voxel;

  DataMatrix() = default;
  DataMatrix(Matrix v, AxisRole r, AxisRole c)
      : values(std::move(v)), row_role(r), col_role(c) {}

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }

  bool all_finite() const { return values.allFinite(); }

  // Enforces: rows >= 1, cols >= 1, all entries finite.
  void require_valid(const char* context) const;
};

}  // namespace homotopica

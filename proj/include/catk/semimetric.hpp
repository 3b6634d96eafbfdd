#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "catk/model_point.hpp"

namespace catk {

// Labeled distance matrix: symmetric, zero diagonal, positive off the
// diagonal. The triangle inequality is not assumed.
class SemimetricSpace {
 public:
  // Throws Error(Data) on a malformed matrix or duplicate labels. Entries
  // that differ from their transpose by at most `symmetry_tol` (relative)
  // are averaged.
  SemimetricSpace(std::vector<std::string> labels, Eigen::MatrixXd dist,
                  double symmetry_tol = 1e-12);

  static SemimetricSpace from_points(std::vector<std::string> labels,
                                     const std::vector<ModelPoint>& points);
  // Labels "p0", "p1", ...
  static std::vector<std::string> default_labels(int n);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const Eigen::MatrixXd& dist() const noexcept { return dist_; }
  double operator()(int i, int j) const { return dist_(i, j); }

  // Index of a label; throws Error(Usage) if absent.
  int index_of(const std::string& label) const;

  SemimetricSpace subspace(const std::vector<int>& indices) const;
  SemimetricSpace subspace(const std::vector<std::string>& labels) const;

 private:
  std::vector<std::string> labels_;
  Eigen::MatrixXd dist_;
};

}  // namespace catk

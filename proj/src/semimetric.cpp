#include "catk/semimetric.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "catk/error.hpp"

namespace catk {

SemimetricSpace::SemimetricSpace(std::vector<std::string> labels, Eigen::MatrixXd dist,
                                 double symmetry_tol)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  const auto n = static_cast<Eigen::Index>(labels_.size());
  if (dist_.rows() != n || dist_.cols() != n)
    throw Error(ErrorKind::Data, "distance matrix size does not match the number of labels");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorKind::Data, "labels must be non-empty");
    if (!seen.insert(l).second) throw Error(ErrorKind::Data, "duplicate label '" + l + "'");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (dist_(i, i) != 0.0)
      throw Error(ErrorKind::Data, "diagonal entry for '" + labels_[i] + "' is not zero");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double u = dist_(i, j);
      const double v = dist_(j, i);
      const std::string where = "'" + labels_[i] + "', '" + labels_[j] + "'";
      if (!std::isfinite(u) || !std::isfinite(v))
        throw Error(ErrorKind::Data, "non-finite distance between " + where);
      if (std::abs(u - v) > symmetry_tol * std::max({1.0, std::abs(u), std::abs(v)}))
        throw Error(ErrorKind::Data, "distance matrix is not symmetric at " + where);
      const double m = 0.5 * (u + v);
      if (!(m > 0.0))
        throw Error(ErrorKind::Data, "distance between distinct points " + where +
                                         " must be positive");
      dist_(i, j) = dist_(j, i) = m;
    }
  }
}

SemimetricSpace SemimetricSpace::from_points(std::vector<std::string> labels,
                                             const std::vector<ModelPoint>& points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      m(i, j) = m(j, i) = model_distance(points[i], points[j]);
  return SemimetricSpace(std::move(labels), std::move(m));
}

std::vector<std::string> SemimetricSpace::default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

int SemimetricSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::Usage, "unknown label '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

SemimetricSpace SemimetricSpace::subspace(const std::vector<int>& indices) const {
  const auto n = static_cast<Eigen::Index>(indices.size());
  std::vector<std::string> labels;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    labels.push_back(labels_.at(indices[i]));
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = dist_(indices[i], indices[j]);
  }
  return SemimetricSpace(std::move(labels), std::move(m));
}

SemimetricSpace SemimetricSpace::subspace(const std::vector<std::string>& labels) const {
  std::vector<int> idx;
  for (const auto& l : labels) idx.push_back(index_of(l));
  return subspace(idx);
}

}  // namespace catk

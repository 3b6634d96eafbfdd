#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "catk/semimetric.hpp"

namespace catk {

// A labeled distance matrix read from CSV or JSON, plus an optional
// curvature.
struct InputDocument {
  std::vector<std::string> labels;
  Eigen::MatrixXd matrix;
  std::optional<double> curvature;

  // Throws Error(Data) when the matrix is not a semimetric.
  SemimetricSpace to_space() const;
};

// CSV layout: a header row of labels (optionally preceded by a corner cell,
// empty or named), then one row per point holding either the full row or the
// lower triangle up to the diagonal. Rows may start with their label. Blank lines
// and lines starting with '#' are ignored. Errors carry line and column.
InputDocument parse_csv(const std::string& text);

// JSON layout: {"labels": [...], "matrix": [[...], ...], "curvature": K}.
// Matrix rows may also be the lower triangle up to the diagonal.
InputDocument parse_json(const std::string& text);

// JSON when the first non-blank character is '{', CSV otherwise.
InputDocument parse_input(const std::string& text);

// Reads a file ("-" for standard input). Throws Error(Usage) if unreadable.
std::string read_input_file(const std::string& path);

// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace catk

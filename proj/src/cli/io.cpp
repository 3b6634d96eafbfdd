#include "catk/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "catk/error.hpp"

namespace catk {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::Parse,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

struct Cell {
  std::string text;
  std::size_t column = 1;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Cell> split_cells(const std::string& line) {
  std::vector<Cell> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    const std::string raw = line.substr(start, comma == std::string::npos ? comma : comma - start);
    const auto lead = raw.find_first_not_of(" \t");
    cells.push_back({trim(raw), start + 1 + (lead == std::string::npos ? 0 : lead)});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> to_number(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

// Fills entries given only in the lower triangle from their transpose.
Eigen::MatrixXd complete(Eigen::MatrixXd g) {
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (std::isnan(g(i, j))) g(i, j) = g(j, i);
  return g;
}

}  // namespace

SemimetricSpace InputDocument::to_space() const { return SemimetricSpace(labels, matrix); }

InputDocument parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::size_t> corner_offset;
  InputDocument doc;
  Eigen::MatrixXd g;
  std::size_t row = 0;
  std::size_t last_line = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    last_line = lineno;
    std::vector<Cell> cells = split_cells(raw);
    if (!corner_offset) {
      corner_offset = cells.front().text.empty() ? 1 : 0;
      for (std::size_t i = *corner_offset; i < cells.size(); ++i) {
        if (cells[i].text.empty()) parse_error(lineno, cells[i].column, "empty label");
        doc.labels.push_back(cells[i].text);
      }
      if (doc.labels.empty()) parse_error(lineno, 1, "header row has no labels");
      const auto n = static_cast<Eigen::Index>(doc.labels.size());
      g = Eigen::MatrixXd::Constant(n, n, kMissing);
      continue;
    }
    // A named corner cell shows up as a header one longer than the rows.
    if (row == 0 && *corner_offset == 0 && doc.labels.size() > 1 &&
        !to_number(cells.front().text) && cells.front().text != doc.labels[0] &&
        cells.front().text == doc.labels[1]) {
      doc.labels.erase(doc.labels.begin());
      const auto m = static_cast<Eigen::Index>(doc.labels.size());
      g = Eigen::MatrixXd::Constant(m, m, kMissing);
      corner_offset = 1;
    }
    const std::size_t n = doc.labels.size();
    if (row >= n) parse_error(lineno, 1, "more rows than labels");
    std::size_t first = 0;
    if (!to_number(cells.front().text)) {
      if (cells.front().text != doc.labels[row])
        parse_error(lineno, cells.front().column,
                    "row label '" + cells.front().text + "' does not match header label '" +
                        doc.labels[row] + "'");
      first = 1;
    }
    const std::size_t count = cells.size() - first;
    if (count != n && count != row + 1)
      parse_error(lineno, cells.back().column,
                  "expected " + std::to_string(n) + " values (full row) or " +
                      std::to_string(row + 1) + " (lower triangle), found " +
                      std::to_string(count));
    for (std::size_t k = 0; k < count; ++k) {
      const Cell& cell = cells[first + k];
      const auto v = to_number(cell.text);
      if (!v) parse_error(lineno, cell.column, "'" + cell.text + "' is not a number");
      g(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(k)) = *v;
    }
    ++row;
  }
  if (!corner_offset) parse_error(1, 1, "input is empty");
  if (row != doc.labels.size())
    parse_error(last_line + 1, 1,
                "expected " + std::to_string(doc.labels.size()) + " rows, found " +
                    std::to_string(row));
  doc.matrix = complete(std::move(g));
  return doc;
}

InputDocument parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_error(line, column, "invalid JSON");
  }
  auto fail = [](const std::string& what) -> void { throw Error(ErrorKind::Parse, what); };
  if (!j.is_object()) fail("top-level JSON value must be an object");
  if (!j.contains("labels") || !j["labels"].is_array()) fail("'labels' must be an array");
  if (!j.contains("matrix") || !j["matrix"].is_array()) fail("'matrix' must be an array");

  InputDocument doc;
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) fail("'labels' entries must be strings");
    doc.labels.push_back(l.get<std::string>());
  }
  const std::size_t n = doc.labels.size();
  const auto& rows = j["matrix"];
  if (rows.size() != n)
    fail("'matrix' has " + std::to_string(rows.size()) + " rows for " + std::to_string(n) +
         " labels");
  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Constant(nn, nn, kMissing);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& rowj = rows[r];
    const std::string where = "matrix row " + std::to_string(r);
    if (!rowj.is_array()) fail(where + " must be an array");
    if (rowj.size() != n && rowj.size() != r + 1)
      fail(where + " must hold " + std::to_string(n) + " or " + std::to_string(r + 1) + " values");
    for (std::size_t k = 0; k < rowj.size(); ++k) {
      if (!rowj[k].is_number()) fail(where + " holds a non-numeric entry");
      g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = rowj[k].get<double>();
    }
  }
  doc.matrix = complete(std::move(g));
  if (j.contains("curvature") && !j["curvature"].is_null()) {
    if (!j["curvature"].is_number()) fail("'curvature' must be a number");
    doc.curvature = j["curvature"].get<double>();
  }
  return doc;
}

InputDocument parse_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_csv(text);
}

std::string read_input_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Usage, "cannot read input file '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::Data, "SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

}  // namespace catk

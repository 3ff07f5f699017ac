#ifndef SPRD_IO_HPP
#define SPRD_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sprd/majorization.hpp"
#include "sprd/types.hpp"

namespace sprd {

using Json = nlohmann::json;

/// Matrix JSON format: {"rows": n, "cols": m, "re": [[..]], "im": [[..]]},
/// "im" omitted for real matrices.
inline Matrix matrix_from_json(const Json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("re"))
    throw invalid_input("matrix JSON: need rows, cols, re");
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw invalid_input("matrix JSON: bad shape");
  const auto& re = j.at("re");
  const bool has_im = j.contains("im");
  if (re.size() != static_cast<std::size_t>(rows) ||
      (has_im && j.at("im").size() != static_cast<std::size_t>(rows)))
    throw invalid_input("matrix JSON: row count mismatch");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& rrow = re.at(i);
    if (rrow.size() != static_cast<std::size_t>(cols))
      throw invalid_input("matrix JSON: column count mismatch");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const double im =
          has_im ? j.at("im").at(i).at(k).get<double>() : 0.0;
      m(i, k) = Complex(rrow.at(k).get<double>(), im);
    }
  }
  return m;
}

inline Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json re = Json::array(), im = Json::array();
  bool complex_entries = false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rrow = Json::array(), irow = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rrow.push_back(m(i, k).real());
      irow.push_back(m(i, k).imag());
      if (m(i, k).imag() != 0.0) complex_entries = true;
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  j["re"] = std::move(re);
  if (complex_entries) j["im"] = std::move(im);
  return j;
}

/// Plain text: whitespace-separated rows of reals, one row per line
/// (real symmetric matrices only when used for Hermitian input).
inline Matrix matrix_from_text(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw invalid_input("matrix text: empty input");
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw invalid_input("matrix text: ragged rows");
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  return m;
}

/// Loads a matrix from a file, sniffing JSON vs plain text.
inline Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{')
    return matrix_from_json(Json::parse(content));
  std::istringstream text(content);
  return matrix_from_text(text);
}

inline Json vector_to_json(const RealVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline Json report_to_json(const MajorizationReport& r) {
  Json j;
  j["relation"] = r.relation == Relation::majorized ? "majorized" : "submajorized";
  j["verdict"] = r.verdict;
  j["margins"] = vector_to_json(r.margins);
  j["min_margin"] = r.min_margin();
  j["trace_gap"] = r.trace_gap;
  j["tolerance"] = r.tolerance;
  j["padded_length"] = r.padded_length;
  return j;
}

}  // namespace sprd

#endif  // SPRD_IO_HPP

#include "lqu/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "lqu/error.hpp"

namespace lqu {

CMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_array() || doc.empty()) {
    throw Error(ErrorKind::input, "matrix must be a non-empty array of rows");
  }
  const std::size_t rows = doc.size();
  if (!doc[0].is_array() || doc[0].empty()) {
    throw Error(ErrorKind::input, "matrix row 0 is not a non-empty array");
  }
  const std::size_t cols = doc[0].size();
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = doc[r];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorKind::input, "matrix row " + std::to_string(r) + " has wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& entry = row[c];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        std::ostringstream os;
        os << "matrix entry (" << r << "," << c << ") is not an [re, im] pair";
        throw Error(ErrorKind::input, os.str());
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          cplx(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json doc = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    doc.push_back(std::move(row));
  }
  return doc;
}

CMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::input, "cannot read matrix file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::input, "matrix file " + path.string() + " is not JSON: " + e.what());
  }
  return matrix_from_json(doc);
}

void write_matrix_file(const std::filesystem::path& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::input, "cannot write matrix file " + path.string());
  out << matrix_to_json(m).dump() << '\n';
}

}  // namespace lqu

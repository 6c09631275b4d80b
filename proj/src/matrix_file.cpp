#include "ckinv/matrix_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ckinv/error.hpp"

namespace ckinv {

IntMatrix parse_matrix(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<int> row;
    std::size_t pos = first;
    while (pos < line.size()) {
      const auto end = line.find_first_of(" \t", pos);
      const std::string token = line.substr(pos, end == std::string::npos ? end : end - pos);
      if (token != "0" && token != "1") {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": token '" + token + "' is not 0 or 1");
      }
      row.push_back(token == "1");
      if (end == std::string::npos) break;
      pos = line.find_first_not_of(" \t", end);
      if (pos == std::string::npos) break;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": row has " +
                                             std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "no matrix rows");
  if (rows.size() != rows.front().size()) {
    throw Error(ErrorCode::ParseError, std::to_string(rows.size()) + " rows of length " +
                                           std::to_string(rows.front().size()) +
                                           ": matrix is not square");
  }
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix parse_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace ckinv

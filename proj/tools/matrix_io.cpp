#include "matrix_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "lpmchol/error.hpp"

namespace lpmch {

using lpmchol::Errc;
using lpmchol::Error;

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_number(const std::string& field, const std::string& where) {
  const char* begin = field.c_str();
  while (*begin == ' ' || *begin == '\t') ++begin;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
  if (end == begin || (end && *end != '\0') || errno == ERANGE) {
    throw Error(Errc::ParseError, "bad number '" + field + "' in " + where);
  }
  return v;
}

Eigen::MatrixXd from_rows(const std::vector<std::vector<double>>& rows, const std::string& where) {
  if (rows.empty()) throw Error(Errc::ParseError, "empty matrix in " + where);
  const auto cols = rows.front().size();
  Eigen::MatrixXd m(Eigen::Index(rows.size()), Eigen::Index(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::ParseError, "ragged rows in " + where);
    for (std::size_t j = 0; j < cols; ++j) m(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
  }
  return m;
}

Eigen::MatrixXd parse_csv(const std::string& text, const std::string& where) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) row.push_back(parse_number(field, where));
    rows.push_back(std::move(row));
  }
  return from_rows(rows, where);
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_json(const Eigen::MatrixXd& m) {
  std::string out = "{\"dim\":" + std::to_string(m.rows()) + ",\"rows\":[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += ']';
  }
  return out + "]}";
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
  const nlohmann::json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("rows")) throw Error(Errc::ParseError, "matrix object has no \"rows\"");
    rows = &j.at("rows");
  }
  if (!rows->is_array()) throw Error(Errc::ParseError, "matrix rows must be an array");
  std::vector<std::vector<double>> data;
  for (const auto& r : *rows) {
    if (!r.is_array()) throw Error(Errc::ParseError, "matrix row must be an array");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) throw Error(Errc::ParseError, "matrix entry is not a number");
      row.push_back(v.get<double>());
    }
    data.push_back(std::move(row));
  }
  Eigen::MatrixXd m = from_rows(data, "JSON matrix");
  if (j.is_object() && j.contains("dim") && j.at("dim") != m.rows()) {
    throw Error(Errc::ParseError, "\"dim\" does not match the number of rows");
  }
  return m;
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, "'" + path + "': " + e.what());
  }
}

Eigen::MatrixXd read_matrix(const std::string& path) {
  if (ends_with(path, ".json")) return matrix_from_json(read_json(path));
  if (ends_with(path, ".csv")) return parse_csv(slurp(path), "'" + path + "'");
  throw Error(Errc::ParseError, "unknown matrix file extension for '" + path + "' (want .json or .csv)");
}

void write_matrix(const std::string& path, const Eigen::MatrixXd& m) {
  std::string text;
  if (ends_with(path, ".json")) {
    text = matrix_json(m) + "\n";
  } else if (ends_with(path, ".csv")) {
    text = matrix_csv(m);
  } else {
    throw Error(Errc::ParseError, "unknown matrix file extension for '" + path + "' (want .json or .csv)");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace lpmch

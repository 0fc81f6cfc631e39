#ifndef LPMCH_MATRIX_IO_HPP
#define LPMCH_MATRIX_IO_HPP

#include <string>

#include <Eigen/Dense>

#include "json.hpp"

namespace lpmch {

/// 17 significant digits; parses back to the same double.
std::string format_double(double x);

/// {"dim":n,"rows":[[...],...]} on one line.
std::string matrix_json(const Eigen::MatrixXd& m);
/// Plain comma-separated rows, one per line.
std::string matrix_csv(const Eigen::MatrixXd& m);

/// Reads JSON ({"dim", "rows"} or a bare array of rows) or CSV, chosen by
/// file extension. Raises lpmchol::Error(ParseError) on malformed input.
Eigen::MatrixXd read_matrix(const std::string& path);
Eigen::MatrixXd matrix_from_json(const nlohmann::json& j);

/// Writes JSON or CSV by extension.
void write_matrix(const std::string& path, const Eigen::MatrixXd& m);

nlohmann::json read_json(const std::string& path);

}  // namespace lpmch

#endif  // LPMCH_MATRIX_IO_HPP

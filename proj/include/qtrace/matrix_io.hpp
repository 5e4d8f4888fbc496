#pragma once

#include <string>

#include <json.hpp>

#include "qtrace/matrix.hpp"

namespace qtrace {

/// Parse the shared matrix JSON format {"n": int, "re": [[...]], "im": [[...]]}
/// with row-major n x n arrays; "im" is optional and defaults to zeros.
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);

/// Load a matrix from a JSON file. Throws FileNotFound / ParseError.
Matrix read_matrix_file(const std::string& path);

void write_matrix_file(const std::string& path, const Matrix& m);

}  // namespace qtrace

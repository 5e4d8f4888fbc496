#include "qtrace/matrix_io.hpp"

#include <fstream>

namespace qtrace {

using nlohmann::json;

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("re"))
        throw ParseError("matrix JSON needs fields \"n\" and \"re\"");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("matrix JSON: n must be positive");
    const auto read_plane = [n](const json& plane, const char* name) {
        if (!plane.is_array() || static_cast<int>(plane.size()) != n)
            throw ParseError(std::string("matrix JSON: \"") + name + "\" must be an n x n array");
        Eigen::MatrixXd out(n, n);
        for (int i = 0; i < n; ++i) {
            const auto& row = plane.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError(std::string("matrix JSON: row length mismatch in \"") + name +
                                 "\"");
            for (int k = 0; k < n; ++k) out(i, k) = row.at(k).get<double>();
        }
        return out;
    };
    const Eigen::MatrixXd re = read_plane(j.at("re"), "re");
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(n, n);
    if (j.contains("im")) im = read_plane(j.at("im"), "im");
    Matrix m(n, n);
    m.real() = re;
    m.imag() = im;
    return m;
}

json matrix_to_json(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    json re = json::array(), im = json::array();
    for (int i = 0; i < n; ++i) {
        json re_row = json::array(), im_row = json::array();
        for (int k = 0; k < n; ++k) {
            re_row.push_back(m(i, k).real());
            im_row.push_back(m(i, k).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    return json{{"n", n}, {"re", re}, {"im", im}};
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open matrix file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw FileNotFound("cannot open matrix file for writing: " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

}  // namespace qtrace

#include "orthokit/io.hpp"

#include <fstream>
#include <ostream>

#include "orthokit/errors.hpp"

namespace orthokit {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json matrix_to_json(const ComplexMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json data = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            data.push_back({m(i, k).real(), m(i, k).imag()});
    j["data"] = std::move(data);
    return j;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw OrthokitError("matrix_from_json: expected {rows, cols, data}");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& data = j.at("data");
    if (!data.is_array() || data.size() != rows * cols)
        throw OrthokitError("matrix_from_json: data length must equal rows*cols");
    ComplexMatrix m(rows, cols);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k, ++idx) {
            const auto& e = data.at(idx);
            if (e.is_array() && e.size() == 2)
                m(i, k) = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
            else if (e.is_number())
                m(i, k) = cplx{e.get<double>(), 0.0};
            else
                throw OrthokitError("matrix_from_json: entries must be [re, im] or numbers");
        }
    return m;
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OrthokitError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw OrthokitError("parse error in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace

ComplexMatrix load_matrix(const std::string& path) { return matrix_from_json(parse_file(path)); }

ComplexMatrix load_matrix_field(const std::string& path, const std::string& field) {
    const json j = parse_file(path);
    if (!j.contains(field)) throw OrthokitError("'" + path + "' has no field '" + field + "'");
    return matrix_from_json(j.at(field));
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw OrthokitError("cannot write '" + path + "'");
    out << matrix_to_json(m).dump(2) << '\n';
}

ordered_json verdict_to_json(const OrthoVerdict& v) {
    ordered_json j;
    j["status"] = to_string(v.status);
    j["reason"] = to_string(v.reason);
    if (v.witness_lambda)
        j["witness_lambda"] = {v.witness_lambda->real(), v.witness_lambda->imag()};
    if (v.witness_vector) j["witness_vector"] = matrix_to_json(*v.witness_vector);
    if (v.profile) {
        j["min_defect"] = v.profile->min_defect;
        j["max_abs_defect"] = v.profile->max_abs_defect;
        j["argmin_lambda"] = {v.profile->argmin_lambda.real(), v.profile->argmin_lambda.imag()};
        j["grid_points"] = v.profile->samples.size();
    }
    return j;
}

void write_profile_csv(std::ostream& os, const DefectProfile& profile) {
    os << "re_lambda,im_lambda,defect\n";
    os.precision(17);
    for (const auto& s : profile.samples)
        os << s.lambda.real() << ',' << s.lambda.imag() << ',' << s.defect << '\n';
}

}  // namespace orthokit

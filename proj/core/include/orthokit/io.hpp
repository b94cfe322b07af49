#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "orthokit/complex_matrix.hpp"
#include "orthokit/verdict.hpp"

namespace orthokit {

/// Wire format: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Reads one matrix, or the named field of an object holding several.
ComplexMatrix load_matrix(const std::string& path);
ComplexMatrix load_matrix_field(const std::string& path, const std::string& field);

void save_matrix(const std::string& path, const ComplexMatrix& m);

nlohmann::ordered_json verdict_to_json(const OrthoVerdict& v);

/// Columns: re(lambda), im(lambda), defect.
void write_profile_csv(std::ostream& os, const DefectProfile& profile);

}  // namespace orthokit

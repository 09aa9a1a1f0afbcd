#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "eigenscheme/hilbert.hpp"

namespace eigenscheme {

using Json = nlohmann::json;

/// First line "r c", then r rows of c rationals.
QMatrix parse_matrix_text(std::string_view text);
std::string matrix_to_text(const QMatrix& M);

/// {"rows": r, "cols": c, "entries": ["p/q", ...]} row-major.
QMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const QMatrix& M);

/// JSON if the first non-blank character is '{', text otherwise.
QMatrix parse_matrix(std::string_view text);

/// [{"lambda": "p/q", "blocks": [[r, k], ...]}, ...]
JordanSpec spec_from_json(const Json& j);
Json spec_to_json(const JordanSpec& spec);
std::string spec_to_text(const JordanSpec& spec);

Json report_to_json(const ComponentReport& report);
std::string report_to_text(const ComponentReport& report);

/// One polynomial per line.
std::string basis_to_text(const std::vector<Polynomial>& polys);

std::string read_file(const std::string& path);

}  // namespace eigenscheme

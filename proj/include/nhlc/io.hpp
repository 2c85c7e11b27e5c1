#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhlc/algebra.hpp"
#include "nhlc/linalg.hpp"
#include "nhlc/report.hpp"
#include "nhlc/spaces.hpp"

namespace nhlc {

using Json = nlohmann::ordered_json;

/// Algebra file document; keys in fixed order, rationals as "p/q" strings.
Json algebra_to_json(const ColorAlgebra& a);
/// Shape and format checks only; the axioms are left to validate_algebra.
ColorAlgebra parse_algebra_json(const Json& doc);
/// Throws ParseError for malformed documents and ValidationError when the axioms fail.
ColorAlgebra algebra_from_json(const Json& doc);

/// "-" reads standard input. Throws InputError when the file cannot be opened, ParseError on bad JSON.
Json read_json(const std::string& path);
Json read_json(std::istream& in);

/// Two-space indented document followed by a newline.
std::string save_algebra(const ColorAlgebra& a);
void save_algebra(const ColorAlgebra& a, std::ostream& out);
ColorAlgebra load_algebra(std::istream& in);
/// "-" reads standard input. Throws InputError when the file cannot be opened.
ColorAlgebra load_algebra(const std::string& path);

/// {"degree": [..], "matrix": [[..]]} for a homogeneous map of the given algebra.
Json map_to_json(const HomMap& d);
HomMap map_from_json(const Json& doc, const ColorAlgebra& a);

Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
Json degree_to_json(const GroupElement& g);
Json violations_to_json(const ValidationReport& report);
/// Blocks with k, degree, dimension and basis matrices.
Json space_to_json(const GradedMapSpace& space);

/// {"command", "algebra", "parameters", "results", "violations"}.
Json make_report(const std::string& command, const std::string& algebra, Json parameters, Json results,
                 const ValidationReport& report);

}  // namespace nhlc

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetsym/analysis.hpp"
#include "json.hpp"

namespace jetsym {

using Json = nlohmann::json;

/// Parses UTF-8 JSON text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text, const std::string& source = "input");
Json read_json_file(const std::string& path);

struct DistributionModel {
  Distribution dist;
  std::optional<PointAssignment> point;
};

/// {"chart": [...], "generators": [{coord: expr}], "point": {coord: rational}}.
DistributionModel distribution_from_json(const Json& j);
/// {"base": [...], "order": k, "parameters": [...], "top": {"2,1": expr}, "lower": {...}}.
EquationChart equation_from_json(const Json& j);
/// {"layers": {"-1": [labels]}, "brackets": [{"x", "y", "value": {label: rational}}]}.
GradedLieAlgebra lie_algebra_from_json(const Json& j);
/// {"functions": [{"name", "f"}]} or a bare list of expressions.
std::vector<NamedExpr> generating_functions_from_json(const Json& j);
/// {"fields": [{"name", "components": {coord: expr}}]}, parsed on vars. A
/// "chart" entry, when present, must equal vars.
std::vector<std::pair<std::string, VectorField>> fields_from_json(const Json& j, const VarList& vars);
/// {"chart": [...], "fields": [...]} on its own chart.
std::vector<std::pair<std::string, VectorField>> fields_from_json(const Json& j);
/// name -> integer or list of integers; a "weights" wrapper is accepted.
Weights weights_from_json(const Json& j);
/// coordinate -> integer for the solver.
std::map<std::string, int> coordinate_weights_from_json(const Json& j);

Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json to_json(const VectorField& v);
Json to_json(const Distribution& d);
Json to_json(const GradedLieAlgebra& a);
Json growth_json(const std::vector<std::size_t>& g);

}  // namespace jetsym

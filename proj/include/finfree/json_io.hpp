#pragma once

#include "finfree/finite_free.hpp"
#include "finfree/matrix_lab.hpp"
#include "finfree/quadrature.hpp"

#include <json.hpp>

#include <string>

namespace finfree {

using ordered_json = nlohmann::ordered_json;

// {"d": 2, "a": ["1", "0", "-2"]}
ordered_json polynomial_to_json(const PolynomialFF& p);

// Accepts {"d","a"} or {"roots": [...]} (rational strings either way).
PolynomialFF polynomial_from_json(const ordered_json& j);

// Inline JSON, or the shorthand "roots:1,-1,2/3".
PolynomialFF parse_polynomial_arg(const std::string& text);

ordered_json quadrature_report_to_json(const QuadratureReport& report);

// {"kind","method","d","k",...,"expected","pass","seed"}
ordered_json estimate_report_to_json(const std::string& kind, const std::string& method, int d,
                                     int k, const EstimateReport& report);
ordered_json exact_value_to_json(const std::string& kind, const std::string& method, int d, int k,
                                 const Rat& value, const Rat& expected);

// Weingarten table keyed by partition strings, values as rational strings.
ordered_json weingarten_table_to_json(const WeingartenTable& table);

// {"3": {"3": 1, ...}, ...} — integer character values.
ordered_json character_table_to_json(const CharacterTable& table);

// {"1": {"1": "1"}} — rational zonal values as strings.
ordered_json zonal_table_to_json(const ZonalTable& table);

ordered_json matrix_sample_to_json(const MatrixSample& sample);

}  // namespace finfree

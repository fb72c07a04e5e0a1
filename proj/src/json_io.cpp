#include "finfree/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace finfree {

ordered_json polynomial_to_json(const PolynomialFF& p) {
    ordered_json j;
    j["d"] = p.d;
    ordered_json coeffs = ordered_json::array();
    for (const Rat& c : p.a) coeffs.push_back(rat_to_string(c));
    j["a"] = std::move(coeffs);
    return j;
}

PolynomialFF polynomial_from_json(const ordered_json& j) {
    if (j.contains("roots")) {
        SpectrumSpec spectrum;
        for (const auto& r : j.at("roots")) {
            if (r.is_string())
                spectrum.emplace_back(rat_from_string(r.get<std::string>()));
            else if (r.is_number_integer())
                spectrum.emplace_back(Rat(r.get<long long>()));
            else
                throw std::invalid_argument("polynomial JSON: roots must be rational strings");
        }
        return char_poly_from_spectrum(spectrum);
    }
    if (!j.contains("d") || !j.contains("a"))
        throw std::invalid_argument("polynomial JSON: need either {\"d\",\"a\"} or {\"roots\"}");
    const int d = j.at("d").get<int>();
    std::vector<Rat> a;
    for (const auto& c : j.at("a")) {
        if (c.is_string())
            a.push_back(rat_from_string(c.get<std::string>()));
        else if (c.is_number_integer())
            a.push_back(Rat(c.get<long long>()));
        else
            throw std::invalid_argument("polynomial JSON: coefficients must be rational strings");
    }
    return PolynomialFF(d, std::move(a));
}

PolynomialFF parse_polynomial_arg(const std::string& text) {
    if (text.rfind("roots:", 0) == 0) {
        SpectrumSpec spectrum;
        std::stringstream ss(text.substr(6));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            spectrum.emplace_back(rat_from_string(tok));
        }
        if (spectrum.empty()) throw std::invalid_argument("parse_polynomial_arg: no roots given");
        return char_poly_from_spectrum(spectrum);
    }
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("parse_polynomial_arg: invalid JSON: ") + e.what());
    }
    return polynomial_from_json(j);
}

ordered_json quadrature_report_to_json(const QuadratureReport& report) {
    ordered_json j;
    j["group"] = report.group.to_string();
    j["d"] = report.group.d;
    j["kmax"] = report.k_max;
    ordered_json cases = ordered_json::array();
    for (const QuadratureCase& c : report.cases) {
        ordered_json jc;
        jc["k"] = c.k;
        jc["p"] = c.p;
        jc["value"] = rat_to_string(c.value);
        jc["expected"] = rat_to_string(c.expected);
        jc["pass"] = c.pass;
        cases.push_back(std::move(jc));
    }
    j["cases"] = std::move(cases);
    j["pass"] = report.all_pass;
    return j;
}

ordered_json estimate_report_to_json(const std::string& kind, const std::string& method, int d,
                                     int k, const EstimateReport& report) {
    ordered_json j;
    j["kind"] = kind;
    j["method"] = method;
    j["d"] = d;
    j["k"] = k;
    j["estimate"] = report.estimate;
    j["stderr"] = report.standard_error;
    j["z"] = report.z_score;
    j["n"] = report.n_samples;
    j["expected"] = rat_to_string(report.closed_form);
    j["pass"] = report.pass;
    j["seed"] = report.seed;
    return j;
}

ordered_json exact_value_to_json(const std::string& kind, const std::string& method, int d, int k,
                                 const Rat& value, const Rat& expected) {
    ordered_json j;
    j["kind"] = kind;
    j["method"] = method;
    j["d"] = d;
    j["k"] = k;
    j["value"] = rat_to_string(value);
    j["expected"] = rat_to_string(expected);
    j["pass"] = (value == expected);
    return j;
}

namespace {

// Table keys run from (1^k) up to (k), matching the documented CLI output.
std::vector<Partition> table_key_order(int k) {
    std::vector<Partition> labels = partitions_of(k);
    std::reverse(labels.begin(), labels.end());
    return labels;
}

}  // namespace

ordered_json weingarten_table_to_json(const WeingartenTable& table) {
    ordered_json j;
    for (const Partition& rho : table_key_order(table.order()))
        j[rho.to_string()] = rat_to_string(table.value(rho));
    return j;
}

ordered_json character_table_to_json(const CharacterTable& table) {
    ordered_json j;
    const std::vector<Partition> keys = table_key_order(table.weight());
    for (const Partition& lambda : keys) {
        ordered_json row;
        for (const Partition& rho : keys)
            row[rho.to_string()] = table.value(lambda, rho).convert_to<long long>();
        j[lambda.to_string()] = std::move(row);
    }
    return j;
}

ordered_json zonal_table_to_json(const ZonalTable& table) {
    ordered_json j;
    const std::vector<Partition> keys = table_key_order(table.weight());
    for (const Partition& lambda : keys) {
        ordered_json row;
        for (const Partition& rho : keys)
            row[rho.to_string()] = rat_to_string(table.value(lambda, rho));
        j[lambda.to_string()] = std::move(row);
    }
    return j;
}

ordered_json matrix_sample_to_json(const MatrixSample& sample) {
    ordered_json j;
    j["group"] = (sample.group == MatrixGroup::unitary) ? "unitary" : "orthogonal";
    j["d"] = static_cast<int>(sample.matrix.rows());
    j["seed"] = sample.seed;
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < sample.matrix.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < sample.matrix.cols(); ++c) {
            const std::complex<double> v = sample.matrix(r, c);
            row.push_back(ordered_json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["unitarity_residual"] = unitarity_residual(sample.matrix);
    return j;
}

}  // namespace finfree

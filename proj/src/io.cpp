#include "subspace/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace subspace::io {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im"))
        throw ParseError("matrix JSON must be an object with fields n, re, im");
    if (!j["n"].is_number_integer())
        throw ParseError("matrix field 'n' must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError("matrix field 'n' must be >= 1");
    Matrix M(n, n);
    for (const char* part : {"re", "im"}) {
        const json& rows = j[part];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw ParseError(std::string("matrix field '") + part +
                             "' must be an n x n array");
        for (int i = 0; i < n; ++i) {
            const json& row = rows[i];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError(std::string("matrix field '") + part +
                                 "' row " + std::to_string(i) + " has wrong length");
            for (int k = 0; k < n; ++k) {
                if (!row[k].is_number())
                    throw ParseError(std::string("matrix field '") + part +
                                     "' has a non-numeric entry");
                const double x = row[k].get<double>();
                if (!std::isfinite(x))
                    throw ParseError(std::string("matrix field '") + part +
                                     "' contains a non-finite entry");
                if (part[0] == 'r')
                    M(i, k) = Complex(x, 0.0);
                else
                    M(i, k) += Complex(0.0, x);
            }
        }
    }
    return M;
}

json matrix_json(const Matrix& M) {
    const int n = static_cast<int>(M.rows());
    json re = json::array(), im = json::array();
    for (int i = 0; i < n; ++i) {
        json rre = json::array(), rim = json::array();
        for (int k = 0; k < n; ++k) {
            rre.push_back(M(i, k).real());
            rim.push_back(M(i, k).imag());
        }
        re.push_back(std::move(rre));
        im.push_back(std::move(rim));
    }
    return json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

SpectralSplit split_from_json(const json& j) {
    if (!j.is_object() || !j.contains("disposition") ||
        !j.contains("sigma_minus") || !j.contains("sigma_plus"))
        throw ParseError("split JSON must carry disposition, sigma_minus, sigma_plus");
    const std::string disp = j["disposition"].get<std::string>();
    Disposition d;
    if (disp == "subordinated")
        d = Disposition::Subordinated;
    else if (disp == "annular")
        d = Disposition::Annular;
    else
        throw ParseError("split field 'disposition' must be 'subordinated' or 'annular'");

    auto read_intervals = [](const json& arr, const char* name) {
        if (!arr.is_array())
            throw ParseError(std::string("split field '") + name +
                             "' must be an array of [lo, hi] pairs");
        std::vector<std::pair<double, double>> out;
        for (const json& p : arr) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
                throw ParseError(std::string("split field '") + name +
                                 "' entries must be numeric [lo, hi] pairs");
            const double lo = p[0].get<double>(), hi = p[1].get<double>();
            if (!std::isfinite(lo) || !std::isfinite(hi))
                throw ParseError(std::string("split field '") + name +
                                 "' contains a non-finite endpoint");
            out.emplace_back(lo, hi);
        }
        return out;
    };
    return make_split(d, read_intervals(j["sigma_minus"], "sigma_minus"),
                      read_intervals(j["sigma_plus"], "sigma_plus"));
}

json optional_bound(const std::optional<double>& v) {
    if (!v) return nullptr;
    if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
    return *v;
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Matrix read_matrix_json(const std::string& path) {
    return matrix_from_json(load_json(path));
}

Matrix parse_matrix_json(const std::string& text) {
    return matrix_from_json(parse_json(text));
}

std::string matrix_to_json(const Matrix& M) {
    return matrix_json(M).dump(2);
}

void write_matrix_json(const Matrix& M, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << matrix_to_json(M) << '\n';
}

SpectralSplit read_split_json(const std::string& path) {
    return split_from_json(load_json(path));
}

SpectralSplit parse_split_json(const std::string& text) {
    return split_from_json(parse_json(text));
}

std::string split_to_json(const SpectralSplit& split) {
    json j;
    j["disposition"] =
        split.disposition == Disposition::Subordinated ? "subordinated" : "annular";
    json minus = json::array(), plus = json::array();
    for (auto& [lo, hi] : split.sigma_minus) minus.push_back(json::array({lo, hi}));
    for (auto& [lo, hi] : split.sigma_plus) plus.push_back(json::array({lo, hi}));
    j["sigma_minus"] = std::move(minus);
    j["sigma_plus"] = std::move(plus);
    return j.dump(2);
}

void write_split_json(const SpectralSplit& split, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << split_to_json(split) << '\n';
}

std::string report_to_json(const BoundReport& report) {
    json j;
    j["disposition"] =
        report.disposition == Disposition::Subordinated ? "subordinated" : "annular";
    j["norm_V"] = report.norm_V;
    json flags;
    for (auto& [name, value] : report.conditions) flags[name] = value;
    j["conditions"] = std::move(flags);
    j["kappa"] = optional_bound(report.kappa);
    j["mu_star"] = optional_bound(report.mu_star);
    j["bound_estin"] = optional_bound(report.bound_estin);
    j["bound_dk"] = optional_bound(report.bound_dk);
    j["bound_apriori"] = optional_bound(report.bound_apriori);
    j["bound_trio"] = optional_bound(report.bound_trio);
    j["delta_minus"] = optional_bound(report.delta_minus);
    j["delta_plus"] = optional_bound(report.delta_plus);
    j["actual_gap"] = optional_bound(report.actual_gap);
    j["theta_U"] = optional_bound(report.theta_U);
    j["sharpness_ratio"] = optional_bound(report.sharpness_ratio);
    return j.dump(2);
}

std::string boundary_to_csv(const NumRangeBoundary& boundary) {
    std::ostringstream out;
    out << "angle,re,im\n";
    for (std::size_t i = 0; i < boundary.points.size(); ++i)
        out << format_double(boundary.angles[i]) << ','
            << format_double(boundary.points[i].real()) << ','
            << format_double(boundary.points[i].imag()) << '\n';
    return out.str();
}

}  // namespace subspace::io

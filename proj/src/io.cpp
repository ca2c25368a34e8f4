#include "gsp/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace gsp::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

double parse_field(std::string_view field, std::size_t line_no) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw IoError("line " + std::to_string(line_no) + ": cannot parse '" +
                      std::string(field) + "' as a number");
    }
    if (!std::isfinite(value)) {
        throw IoError("line " + std::to_string(line_no) + ": non-finite value '" +
                      std::string(field) + "'");
    }
    return value;
}

}  // namespace

VectorSet<double> read_csv(std::istream& in, bool skip_header) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && skip_header) continue;
        if (trim(line).empty()) continue;

        std::vector<double> row;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            row.push_back(parse_field(rest.substr(0, comma), line_no));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw IoError("line " + std::to_string(line_no) + ": expected " +
                          std::to_string(rows.front().size()) + " values, found " +
                          std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (in.bad()) throw IoError("read error");
    if (rows.empty()) throw IoError("no vectors in input");

    VectorSet<double> S(static_cast<Index>(rows.front().size()), static_cast<Index>(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (std::size_t i = 0; i < rows[j].size(); ++i) {
            S(static_cast<Index>(i), static_cast<Index>(j)) = rows[j][i];
        }
    }
    return S;
}

VectorSet<double> read_csv(const std::filesystem::path& path, bool skip_header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    try {
        return read_csv(in, skip_header);
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_csv(std::ostream& out, const VectorSet<double>& S) {
    char buf[32];
    for (Index j = 0; j < S.cols(); ++j) {
        for (Index i = 0; i < S.rows(); ++i) {
            if (i > 0) out.put(',');
            const int len = std::snprintf(buf, sizeof buf, "%.17g", S(i, j));
            out.write(buf, len);
        }
        out.put('\n');
    }
}

void write_csv(const std::filesystem::path& path, const VectorSet<double>& S) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_csv(out, S);
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

nlohmann::ordered_json to_json(const VerificationReport<double>& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["dim"] = r.dim;
    j["p_target"] = r.p_target;
    j["max_norm_dev"] = r.max_norm_dev;
    j["max_angle_dev"] = r.max_angle_dev;
    j["max_dist_dev"] = r.max_dist_dev;
    j["sum_identity_dev"] = r.sum_identity_dev;
    j["max_prefix_span_residual"] = r.max_prefix_span_residual;
    j["gram_min_eigenvalue_dev"] = r.gram_min_eigenvalue_dev;
    j["feasibility_ok"] = r.feasibility_ok;
    j["passed"] = r.passed;
    j["warnings"] = r.warnings;
    return j;
}

nlohmann::ordered_json to_json(const AsymptoticRecord<double>& rec) {
    nlohmann::ordered_json j;
    j["k"] = rec.k;
    j["residual"] = rec.residual;
    j["scaled"] = rec.scaled;
    j["tail_energy"] = rec.tail_energy;
    j["b_term"] = rec.b_term;
    return j;
}

nlohmann::ordered_json to_json(const ConstantEstimate<double>& est, double p) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : est.records) j["records"].push_back(to_json(rec));
    j["extrapolated_constant"] = est.extrapolated;
    j["constant_sqrt_p_one_minus_p"] = est.stated_constant;
    j["constant_sqrt_one_minus_p"] = est.candidate_constant;
    return j;
}

void write_report(std::ostream& out, const nlohmann::ordered_json& doc) {
    out << doc.dump(2) << '\n';
}

void write_report(const std::filesystem::path& path, const nlohmann::ordered_json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_report(out, doc);
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace gsp::io

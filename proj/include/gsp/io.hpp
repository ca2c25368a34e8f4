#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gsp/asymptotics.hpp"
#include "gsp/linalg.hpp"
#include "gsp/verify.hpp"

namespace gsp::io {

// CSV vector files: one vector per row, comma-separated decimals, optional
// single header line, LF or CRLF line endings. Values are written with 17
// significant digits so a write/read cycle reproduces every double exactly.

VectorSet<double> read_csv(std::istream& in, bool skip_header = false);
VectorSet<double> read_csv(const std::filesystem::path& path, bool skip_header = false);

void write_csv(std::ostream& out, const VectorSet<double>& S);
void write_csv(const std::filesystem::path& path, const VectorSet<double>& S);

nlohmann::ordered_json to_json(const VerificationReport<double>& report);
nlohmann::ordered_json to_json(const AsymptoticRecord<double>& record);
nlohmann::ordered_json to_json(const ConstantEstimate<double>& estimate, double p);

/// Writes `doc` followed by a newline; to stdout-like streams or a file.
void write_report(std::ostream& out, const nlohmann::ordered_json& doc);
void write_report(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

}  // namespace gsp::io

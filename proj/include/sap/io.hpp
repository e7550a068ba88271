#pragma once

// Text formats (".sgn" patterns, ".mat" matrices, comma lists) and the
// JSON/CSV/text rendering of every report. Indices are 1-based in all I/O.

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sap/charpoly.hpp"
#include "sap/jacobian.hpp"
#include "sap/minimality.hpp"
#include "sap/nilpotent.hpp"
#include "sap/pattern.hpp"
#include "sap/realize.hpp"

namespace sap {

using json = nlohmann::ordered_json;

/// Line 1 "n m", then n lines of m characters over {+,-,0}.
/// Throws ParseError with "source:line:col: message".
SignPattern parse_pattern(std::string_view text, std::string_view source = "<input>");
std::string format_pattern(const SignPattern& s);

/// Line 1 "n m", then n lines of m decimals separated by single spaces.
RealMatrix parse_matrix(std::string_view text, std::string_view source = "<input>");
std::string format_matrix(const RealMatrix& m);

/// Whole file as a string; missing or unreadable files throw ParseError.
std::string read_text_file(const std::string& path);

std::vector<double> parse_number_list(std::string_view text);
/// Entries like 3, -1.5, 2i, 1+2i, 1-2.5e-1i, -i.
SpectrumList parse_complex_list(std::string_view text);
/// "i1,j1,i2,j2,..." (1-based) into zero-based positions.
std::vector<Position> parse_positions(std::string_view text);

json to_json(const NilpotentCertificate& c);
json to_json(const JacobianReport& r);
json to_json(const RealizationResult& r, const CoeffVector& target);
json to_json(const MsapReport& r);
json to_json(const PatternScan& s);
json to_json(const NJCertificate& c);

/// Two-space indented JSON with every double printed as %.17g.
std::string dump_json(const json& j);

enum class OutputFormat { Json, Csv, Text };
OutputFormat parse_output_format(std::string_view s);

/// Top-level fields of an object: header plus one row for Csv, "key: value"
/// lines for Text. Nested values are written as compact JSON.
std::string render(const json& j, OutputFormat format);

/// One CSV row per object in rows; columns from the first row.
std::string render_csv_table(const std::vector<json>& rows);

}  // namespace sap

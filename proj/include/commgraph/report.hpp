#pragma once

// Row-oriented reports shared by the CLI and the scan harness.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "commgraph/catalog.hpp"
#include "commgraph/formulas.hpp"

namespace commgraph {

enum class Format { Csv, Json };

/// Throws InvalidParameter for anything but "csv" or "json".
Format parse_format(const std::string& s);

struct ScanRow {
  std::string label, family, params;
  std::uint64_t order = 0, center_size = 0;
  BigInt vertices, edges_c, m1_c, m2_c, edges_nc, m1_nc, m2_nc;
  VerdictStatus verdict_c = VerdictStatus::Undefined, verdict_nc = VerdictStatus::Undefined;
  std::string gap_c, gap_nc;
  std::size_t formula_diff_count = 0;
};

/// Re-checks the complement identity on the report; throws RouteMismatch.
ScanRow make_row(std::string label, std::string family, std::string params, const GroupReport& r,
                 std::size_t formula_diff_count);

/// Authoritative-entry diffs over the family's entries (if spec is given)
/// and the recognized quotient entries.
std::size_t formula_diff_count(const std::optional<FamilySpec>& spec, const FiniteGroup& g, const GroupReport& r);

std::vector<std::string> row_header();
std::vector<std::string> row_fields(const ScanRow& row);
/// Exact integers are JSON strings so no value is ever rounded.
nlohmann::ordered_json row_json(const ScanRow& row);

/// RFC 4180 quoting when a field contains a comma, quote or newline.
std::string csv_line(const std::vector<std::string>& fields);

/// Family name plus named integer parameters ("m", "n", "p", "q", "k").
/// Throws InvalidParameter for unknown names and missing or extra parameters.
FamilySpec make_family(const std::string& name, const std::map<std::string, std::int64_t>& params);
const std::vector<std::string>& family_parameter_names(const std::string& name);

struct ScanSummary {
  std::size_t rows = 0, skipped_abelian = 0, errors = 0;
  std::size_t strict_c = 0, equality_c = 0, fails_c = 0, undefined_c = 0;
  std::size_t strict_nc = 0, equality_nc = 0, fails_nc = 0, undefined_nc = 0;
};

struct ScanResult {
  std::vector<ScanRow> rows;       // catalog order, then extra files by filename
  std::vector<std::string> errors;  // per-file or per-entry messages, same order
  ScanSummary summary;
};

struct ScanOptions {
  std::uint64_t max_order = 60;
  std::optional<std::filesystem::path> extra_dir;
  unsigned jobs = 0;  // 0 = hardware concurrency
  BuildOptions build;
};

/// Output does not depend on jobs. Throws InvalidParameter for max_order < 6
/// or an unreadable extra directory.
ScanResult run_scan(const ScanOptions& opts);

void write_rows(std::ostream& out, const std::vector<ScanRow>& rows, Format f);
nlohmann::ordered_json summary_json(const ScanSummary& s);
std::string summary_line(const ScanSummary& s);

}  // namespace commgraph

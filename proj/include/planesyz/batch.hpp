#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "planesyz/report.hpp"

namespace planesyz {

/// One manifest line: "poly: <text>" or "family: <name> <params>".
struct ManifestEntry {
  int line = 0;
  std::string kind;  // "poly" or "family"
  std::string text;
};

/// Skips blank lines and '#' comments. Lines with another prefix are kept
/// with kind "invalid" so the run can report them.
std::vector<ManifestEntry> parse_manifest(std::istream& in);

struct BatchRow {
  ManifestEntry entry;
  std::string label;    // polynomial text or family label
  std::string status;   // "ok", "failed" (validation) or "inconsistent"
  std::string error;    // error kind name when not ok
  std::string message;
  std::optional<CurveReport> report;
};

/// Analyzes every entry, up to `jobs` at a time. Rows come back in manifest
/// order and never throw; failures are recorded in the row.
std::vector<BatchRow> run_batch(const std::vector<ManifestEntry>& entries, const CoefficientField& field,
                                const AnalysisOptions& options, int jobs = 1);

/// Fixed-width table, one row per entry.
std::string render_summary(const std::vector<BatchRow>& rows);

/// Rows whose status is not "ok".
int warning_count(const std::vector<BatchRow>& rows);

}  // namespace planesyz

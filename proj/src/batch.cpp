#include "planesyz/batch.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "planesyz/families.hpp"
#include "planesyz/parse.hpp"

namespace planesyz {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

BatchRow analyze_entry(const ManifestEntry& entry, const CoefficientField& field, const AnalysisOptions& options) {
  BatchRow row;
  row.entry = entry;
  row.label = entry.text;
  try {
    if (entry.kind == "poly") {
      row.report = analyze_text(entry.text, field, options);
    } else if (entry.kind == "family") {
      const auto [name, params] = parse_family_reference(entry.text);
      row.label = family_label(name, params);
      row.report = analyze(family(name, params), row.label, field, options);
    } else {
      throw Error(ErrorKind::ParseError, "expected 'poly:' or 'family:' at line " + std::to_string(entry.line));
    }
    row.status = row.report->audits_passed() ? "ok" : "inconsistent";
    if (row.status != "ok") row.message = "an audit failed";
  } catch (const Error& e) {
    row.status = is_validation_error(e.kind()) ? "failed" : "inconsistent";
    row.error = to_string(e.kind());
    row.message = e.what();
  }
  return row;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::istream& in) {
  std::vector<ManifestEntry> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto colon = text.find(':');
    const std::string key = colon == std::string::npos ? "" : trim(text.substr(0, colon));
    if (key == "poly" || key == "family")
      out.push_back({number, key, trim(text.substr(colon + 1))});
    else
      out.push_back({number, "invalid", text});
  }
  return out;
}

std::vector<BatchRow> run_batch(const std::vector<ManifestEntry>& entries, const CoefficientField& field,
                                const AnalysisOptions& options, int jobs) {
  std::vector<BatchRow> rows(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) rows[i] = analyze_entry(entries[i], field, options);
  };
  const int threads = std::clamp(jobs, 1, std::max(1, int(entries.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

std::string render_summary(const std::vector<BatchRow>& rows) {
  std::ostringstream out;
  auto cell = [&](const std::string& s, std::size_t width) {
    out << s;
    if (s.size() < width) out << std::string(width - s.size(), ' ');
    out << "  ";
  };
  cell("#", 3);
  cell("curve", 32);
  cell("status", 12);
  cell("d", 3);
  cell("m", 3);
  cell("tau", 4);
  cell("nu", 3);
  out << "labels\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string label = r.label.size() > 32 ? r.label.substr(0, 29) + "..." : r.label;
    cell(std::to_string(i + 1), 3);
    cell(label, 32);
    cell(r.status, 12);
    if (r.report) {
      cell(std::to_string(r.report->d), 3);
      cell(std::to_string(r.report->m), 3);
      cell(std::to_string(r.report->tau), 4);
      cell(std::to_string(r.report->nu), 3);
      std::string labels;
      for (const auto& l : r.report->labels) labels += (labels.empty() ? "" : ",") + l;
      out << labels;
    } else {
      cell("-", 3);
      cell("-", 3);
      cell("-", 4);
      cell("-", 3);
      out << r.error;
    }
    out << '\n';
  }
  return out.str();
}

int warning_count(const std::vector<BatchRow>& rows) {
  return int(std::count_if(rows.begin(), rows.end(), [](const BatchRow& r) { return r.status != "ok"; }));
}

}  // namespace planesyz

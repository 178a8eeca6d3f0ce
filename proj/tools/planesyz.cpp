// planesyz: syzygy and Jacobian invariants of plane curves.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "planesyz/batch.hpp"
#include "planesyz/families.hpp"
#include "planesyz/parse.hpp"
#include "planesyz/report_json.hpp"

namespace {

using namespace planesyz;

constexpr int kOk = 0, kUsage = 1, kValidation = 2, kInconsistent = 3;

struct FamilyArgs {
  std::string name;
  std::optional<int> r, p, d;
  FamilyParams params() const { return {r, p, d}; }
};

void add_family_params(CLI::App* cmd, FamilyArgs& args, CLI::Option* requires_opt) {
  for (auto [flag, slot] : {std::pair{"--r", &args.r}, std::pair{"--p", &args.p}, std::pair{"--d", &args.d}}) {
    auto* opt = cmd->add_option(flag, *slot, "family parameter");
    if (requires_opt) opt->needs(requires_opt);
  }
}

int error_exit(const Error& e) {
  std::cerr << "error: " << e.what() << '\n';
  return is_validation_error(e.kind()) ? kValidation : kInconsistent;
}

std::optional<CoefficientField> field_or_usage(const std::string& text) {
  try {
    return CoefficientField::parse(text);
  } catch (const Error& e) {
    std::cerr << "error: --field: " << e.what() << '\n';
    return std::nullopt;
  }
}

int run_analyze(const std::string& poly, const FamilyArgs& fam, const std::string& field_text,
                const AnalysisOptions& options, bool json) {
  const auto field = field_or_usage(field_text);
  if (!field) return kUsage;
  try {
    CurveReport report;
    if (!fam.name.empty()) {
      const auto label = family_label(fam.name, fam.params());
      report = analyze(family(fam.name, fam.params()), label, *field, options);
    } else {
      report = analyze_text(poly, *field, options);
    }
    std::cout << (json ? dump(report_to_json(report)) : render_text(report));
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    if (!report.audits_passed()) {
      std::cerr << "error: InternalInconsistency: an audit failed\n";
      return kInconsistent;
    }
    return kOk;
  } catch (const Error& e) {
    return error_exit(e);
  }
}

int run_family(const FamilyArgs& fam) {
  try {
    std::cout << family(fam.name, fam.params()).to_string() << '\n';
    return kOk;
  } catch (const Error& e) {
    return error_exit(e);
  }
}

int run_batch_command(const std::string& manifest, const std::string& out_dir, const std::string& field_text,
                      const AnalysisOptions& options, int jobs) {
  const auto field = field_or_usage(field_text);
  if (!field) return kUsage;
  std::ifstream in(manifest);
  if (!in) {
    std::cerr << "error: cannot read manifest '" << manifest << "'\n";
    return kUsage;
  }
  const auto entries = parse_manifest(in);
  const auto rows = run_batch(entries, *field, options, jobs);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create '" << out_dir << "': " << ec.message() << '\n';
    return kUsage;
  }
  Json summary = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    char name[32];
    std::snprintf(name, sizeof name, "%03zu.json", i + 1);
    Json item{{"index", i + 1},    {"line", row.entry.line},  {"input", row.entry.text},
              {"label", row.label}, {"status", row.status}, {"error", row.error},
              {"message", row.message}};
    if (row.report) {
      std::ofstream(std::filesystem::path(out_dir) / name) << dump(report_to_json(*row.report));
      item["report"] = name;
    } else {
      item["report"] = nullptr;
    }
    summary.push_back(std::move(item));
  }
  std::ofstream(std::filesystem::path(out_dir) / "summary.json") << dump(summary);

  std::cout << render_summary(rows);
  const int warnings = warning_count(rows);
  std::cout << rows.size() << " curves, " << warnings << " warning" << (warnings == 1 ? "" : "s") << '\n';
  for (const auto& row : rows)
    if (row.status != "ok")
      std::cerr << "warning: line " << row.entry.line << ": " << row.message << '\n';
  const bool inconsistent =
      std::any_of(rows.begin(), rows.end(), [](const BatchRow& r) { return r.status == "inconsistent"; });
  return inconsistent ? kInconsistent : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygies, Jacobian modules and determinant pairings of plane curves"};
  app.require_subcommand(1);

  AnalysisOptions options;
  std::string field_text = "fp:" + std::to_string(CoefficientField::kDefaultPrime);

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one curve");
  std::string poly;
  FamilyArgs analyze_family;
  bool json = false;
  auto* poly_opt = analyze_cmd->add_option("--poly", poly, "homogeneous polynomial in x, y, z");
  auto* family_opt = analyze_cmd->add_option("--family", analyze_family.name, "named family");
  poly_opt->excludes(family_opt);
  add_family_params(analyze_cmd, analyze_family, family_opt);
  analyze_cmd->add_option("--field", field_text, "fp:<prime> or qq")->capture_default_str();
  analyze_cmd->add_flag("--json", json, "print the report as JSON");
  analyze_cmd->add_flag("--verbose", options.verbose, "include syzygies, pairings, H and minors");
  analyze_cmd->add_flag("--timings", options.timings, "include per-stage timings");
  analyze_cmd->add_option("--max-degree-guard", options.max_degree_guard, "refuse curves of higher degree")
      ->capture_default_str();

  auto* family_cmd = app.add_subcommand("family", "print the polynomial of a named family");
  FamilyArgs family_args;
  family_cmd->add_option("name", family_args.name, "ex2, odd-m4, even-max, odd-max, fermat, triangle")
      ->required();
  add_family_params(family_cmd, family_args, nullptr);

  auto* batch_cmd = app.add_subcommand("batch", "analyze every curve listed in a manifest");
  std::string manifest, out_dir = "reports";
  int jobs = 1;
  batch_cmd->add_option("manifest", manifest, "one 'poly: <text>' or 'family: <name> <params>' per line")
      ->required();
  batch_cmd->add_option("--out", out_dir, "directory for per-curve JSON and summary.json")->capture_default_str();
  batch_cmd->add_option("--field", field_text, "fp:<prime> or qq")->capture_default_str();
  batch_cmd->add_option("--jobs", jobs, "curves analyzed concurrently")->check(CLI::Range(1, 256));
  batch_cmd->add_flag("--verbose", options.verbose, "include syzygies, pairings, H and minors");
  batch_cmd->add_flag("--timings", options.timings, "include per-stage timings");
  batch_cmd->add_option("--max-degree-guard", options.max_degree_guard, "refuse curves of higher degree")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (analyze_cmd->parsed()) {
    if (poly_opt->count() == 0 && family_opt->count() == 0) {
      std::cerr << "error: analyze needs --poly or --family\n";
      return kUsage;
    }
    return run_analyze(poly, analyze_family, field_text, options, json);
  }
  if (family_cmd->parsed()) return run_family(family_args);
  return run_batch_command(manifest, out_dir, field_text, options, jobs);
}

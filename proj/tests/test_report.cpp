#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "planesyz/batch.hpp"
#include "planesyz/families.hpp"
#include "planesyz/parse.hpp"
#include "planesyz/report.hpp"
#include "planesyz/report_json.hpp"
#include "support/corpus.hpp"

using namespace planesyz;

namespace {

const CoefficientField kFp = CoefficientField::parse("fp:1048583");

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInconsistency;
}

// Enough of JSON Schema for docs/report.schema.json. Returns the first
// violation as "path: reason", or an empty string.
class SchemaChecker {
public:
  explicit SchemaChecker(Json root) : root_(std::move(root)) {}

  std::string check(const Json& value) const { return check(value, root_, "$"); }

private:
  Json root_;

  const Json& resolve(const std::string& ref) const {
    REQUIRE(ref.rfind("#/$defs/", 0) == 0);
    return root_.at("$defs").at(ref.substr(8));
  }

  static bool has_type(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  std::string check(const Json& v, const Json& s, const std::string& path) const {
    if (s.is_boolean()) return s.get<bool>() ? "" : path + ": not allowed";
    if (s.contains("$ref")) {
      if (auto e = check(v, resolve(s["$ref"]), path); !e.empty()) return e;
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_string()) ok = has_type(v, s["type"]);
      else
        for (const auto& t : s["type"]) ok = ok || has_type(v, t);
      if (!ok) return path + ": wrong type";
    }
    if (s.contains("enum")) {
      bool ok = false;
      for (const auto& e : s["enum"]) ok = ok || e == v;
      if (!ok) return path + ": not in enum";
    }
    if (s.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
      return path + ": pattern mismatch";
    if (v.is_number()) {
      if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) return path + ": below minimum";
      if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>()) return path + ": above maximum";
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return path + ": too short";
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) return path + ": too long";
      if (s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
          if (auto e = check(v[i], s["items"], path + "[" + std::to_string(i) + "]"); !e.empty()) return e;
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& key : s["required"])
          if (!v.contains(key.get<std::string>())) return path + ": missing " + key.get<std::string>();
      for (const auto& [key, child] : v.items()) {
        const std::string sub = path + "." + key;
        if (s.contains("properties") && s["properties"].contains(key)) {
          if (auto e = check(child, s["properties"][key], sub); !e.empty()) return e;
        } else if (s.contains("additionalProperties")) {
          if (auto e = check(child, s["additionalProperties"], sub); !e.empty()) return e;
        }
      }
    }
    return "";
  }
};

SchemaChecker schema() {
  std::ifstream in(PLANESYZ_SCHEMA_PATH);
  REQUIRE(in.good());
  return SchemaChecker(Json::parse(in));
}

const AuditResult* find_audit(const CurveReport& r, const std::string& name) {
  for (const auto& a : r.audits)
    if (a.name == name) return &a;
  return nullptr;
}

}  // namespace

TEST_CASE("families: definitions") {
  CHECK(family("ex2", {}) == parse_polynomial("y^7+x^7+z*(x^2+y*z)^3"));
  CHECK(family("triangle", {}) == parse_polynomial("x*y*z"));
  CHECK(family("fermat", {.d = 4}) == parse_polynomial("x^4+y^4+z^4"));
  CHECK(family("odd-m4", {.r = 3}) == parse_polynomial("(y^3-x^2*z)*y^2+x^5+y^5"));
  CHECK(family("odd-m4", {.r = 4}) == parse_polynomial("(y^3-x^2*z)*x*y^3+x^7+y^7"));
  CHECK(family("even-max", {.p = 2}) == parse_polynomial("(x^2-y*z)*y*z+x^4+y^4"));
  CHECK(family("odd-max", {.p = 2}) == parse_polynomial("(x^2-y*z)*x*y*z+x^5+y^5"));
  CHECK(family_label("odd-m4", {.r = 3}) == "odd-m4 r=3");
  CHECK(family_label("ex2", {}) == "ex2");
  CHECK(family_names().size() == 6);
}

TEST_CASE("families: errors") {
  CHECK(kind_of([] { family("cusp", {}); }) == ErrorKind::UnknownFamily);
  CHECK(kind_of([] { family("odd-m4", {}); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { family("odd-m4", {.r = 2}); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { family("ex2", {.r = 3}); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { family("even-max", {.p = 1}); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { family("fermat", {.d = 1}); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { family("fermat", {.d = 5000}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("families: references") {
  auto [name, params] = parse_family_reference("odd-m4 r=3");
  CHECK(name == "odd-m4");
  CHECK(params.r == 3);
  std::tie(name, params) = parse_family_reference("even-max 2");
  CHECK(name == "even-max");
  CHECK(params.p == 2);
  std::tie(name, params) = parse_family_reference("  ex2  ");
  CHECK(name == "ex2");
  CHECK_FALSE(params.r.has_value());
  CHECK(kind_of([] { parse_family_reference("fermat d=x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_family_reference("nope"); }) == ErrorKind::UnknownFamily);
}

TEST_CASE("analyze: ex2") {
  const auto r = analyze(family("ex2", {}), "ex2", kFp);
  CHECK(r.polynomial == family("ex2", {}).to_string());
  CHECK(r.evidence == "modular evidence");
  CHECK(r.d == 7);
  CHECK(r.m == 5);
  CHECK(r.exponents == std::vector{6, 6, 6, 6, 6});
  CHECK(r.tau == 12);
  CHECK(r.n_vector == Series{4, {3, 9, 13, 15, 15, 13, 9, 3}});
  CHECK(r.pairing_quotient == Series{0, {1, 3, 6, 10, 15, 21, 18, 6}});
  CHECK_FALSE(r.pairing_quotient.is_symmetric());
  CHECK(r.fitting_quotient == r.pairing_quotient);
  CHECK(r.dpw_bound == 15);
  CHECK(r.labels.front() == "5-syzygy");
  CHECK(r.audits_passed());
  CHECK(r.milnor_algebra.at(21) == 12);
  CHECK_FALSE(r.verbose.has_value());
  CHECK_FALSE(r.timings.has_value());
}

TEST_CASE("analyze: audit bookkeeping") {
  const auto fermat = analyze_text("x^4+y^4+z^4", kFp);
  CHECK(fermat.audits_passed());
  REQUIRE(find_audit(fermat, "three-syzygy-generators"));
  CHECK(find_audit(fermat, "three-syzygy-generators")->applicable);
  CHECK(find_audit(fermat, "three-syzygy-gorenstein")->passed);
  CHECK(fermat.pairing_quotient.is_symmetric());

  const auto free = analyze_text("x*y*z", kFp);
  CHECK(free.labels == std::vector<std::string>{"2-syzygy", "free"});
  CHECK(free.singular_scheme_dimension == 0);
  CHECK_FALSE(find_audit(free, "three-syzygy-generators")->applicable);
  CHECK(free.pairing_quotient == Series{0, {}});

  const auto smooth = analyze_text("x^3+y^3+z^3", kFp);
  CHECK(smooth.tau == 0);
  CHECK(smooth.singular_scheme_dimension == -1);
}

TEST_CASE("analyze: options and guards") {
  const auto r = analyze_text("x^3+y^3+z^3", kFp, {.verbose = true, .timings = true});
  REQUIRE(r.verbose.has_value());
  CHECK(r.verbose->syzygies.size() == 3);
  CHECK(r.verbose->pairings.size() == 3);
  CHECK(r.verbose->minors.count("m12") == 1);
  REQUIRE(r.timings.has_value());
  CHECK_FALSE(r.timings->empty());
  CHECK(kind_of([] { analyze_text("x^5+y^5+z^5", kFp, {.max_degree_guard = 4}); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { analyze_text("x^2*y", kFp); }) == ErrorKind::NonReduced);
  CHECK(kind_of([] { analyze_text("x^2 +", kFp); }) == ErrorKind::ParseError);
  const auto small = analyze_text("x^3+y^3+z^3", CoefficientField::parse("fp:7"));
  CHECK(small.warnings.size() == 1);
}

TEST_CASE("render_text mentions the main invariants") {
  const auto text = render_text(analyze_text("x^3-y^2*z", kFp));
  for (const char* needle : {"nearly-free", "tau", "exponents", "1 2 2"}) {
    CAPTURE(needle);
    CHECK(text.find(needle) != std::string::npos);
  }
}

TEST_CASE("JSON: round trip and determinism") {
  for (const auto& curve : {corpus::Curve{"ex2", {}}, corpus::Curve{"triangle", {}},
                            corpus::Curve{"odd-m4", {.r = 3}}, corpus::Curve{"fermat", {.d = 3}}}) {
    CAPTURE(curve.label());
    for (bool verbose : {false, true}) {
      const auto report = analyze(curve.polynomial(), curve.label(), kFp, {.verbose = verbose});
      const auto j = report_to_json(report);
      const auto text = dump(j);
      CHECK(report_from_json(Json::parse(text)) == report);
      CHECK(dump(report_to_json(report_from_json(Json::parse(text)))) == text);
      CHECK(dump(report_to_json(analyze(curve.polynomial(), curve.label(), kFp, {.verbose = verbose}))) == text);
    }
  }
  CHECK(kind_of([] { report_from_json(Json::parse("{\"d\": 3}")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { report_from_json(Json::parse("[1, 2]")); }) == ErrorKind::ParseError);
  CHECK(series_from_json(series_to_json(Series{3, {1, 2}})) == Series{3, {1, 2}});
}

TEST_CASE("JSON: reports conform to the schema") {
  const auto checker = schema();
  for (const auto& curve : corpus::all()) {
    CAPTURE(curve.label());
    const auto plain = report_to_json(analyze(curve.polynomial(), curve.label(), kFp));
    CHECK(checker.check(plain) == "");
  }
  const auto full = report_to_json(analyze_text("x^3-y^2*z", kFp, {.verbose = true, .timings = true}));
  CHECK(checker.check(full) == "");
  auto broken = full;
  broken["surprise"] = 1;
  CHECK(checker.check(broken) != "");
  broken = full;
  broken["evidence"] = "hunch";
  CHECK(checker.check(broken) != "");
  broken = full;
  broken.erase("tau");
  CHECK(checker.check(broken) != "");
}

TEST_CASE("batch: manifest parsing") {
  std::istringstream in(
      "# corpus\n"
      "\n"
      "poly: x*y*z\n"
      "family: odd-m4 r=3\n"
      "  poly:   x^3+y^3+z^3  \n"
      "curve: x\n");
  const auto entries = parse_manifest(in);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].kind == "poly");
  CHECK(entries[0].text == "x*y*z");
  CHECK(entries[0].line == 3);
  CHECK(entries[1].kind == "family");
  CHECK(entries[1].text == "odd-m4 r=3");
  CHECK(entries[2].text == "x^3+y^3+z^3");
  CHECK(entries[3].kind == "invalid");
  std::istringstream empty("# nothing\n\n");
  CHECK(parse_manifest(empty).empty());
}

TEST_CASE("batch: order, failures and parallelism") {
  std::istringstream in(
      "poly: x^2*y\n"
      "family: ex2\n"
      "poly: x*y*z\n"
      "family: fermat d=4\n"
      "family: odd-m4 r=3\n"
      "curve: nonsense\n");
  const auto entries = parse_manifest(in);
  const auto serial = run_batch(entries, kFp, {}, 1);
  const auto parallel = run_batch(entries, kFp, {}, 4);
  REQUIRE(serial.size() == 6);
  REQUIRE(parallel.size() == 6);
  CHECK(serial[0].status == "failed");
  CHECK(serial[0].error == "NonReduced");
  CHECK_FALSE(serial[0].report.has_value());
  CHECK(serial[1].status == "ok");
  CHECK(serial[1].label == "ex2");
  CHECK(serial[1].report->m == 5);
  CHECK(serial[2].report->labels.back() == "free");
  CHECK(serial[5].status == "failed");
  CHECK(warning_count(serial) == 2);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].status == parallel[i].status);
    CHECK(serial[i].report == parallel[i].report);
  }
  const auto table = render_summary(serial);
  CHECK(table.find("NonReduced") != std::string::npos);
  CHECK(table.find("5-syzygy") != std::string::npos);
  CHECK(run_batch({}, kFp, {}, 3).empty());
}

TEST_CASE("field agreement on small curves") {
  const auto qq = CoefficientField::rationals();
  for (const char* text : {"x^3-y^2*z", "x*y*z*(x+y+z)", "x^6+y^6+x^3*y^2*z", "y^2*z-x^3-x^2*z"}) {
    CAPTURE(text);
    const auto a = analyze_text(text, qq), b = analyze_text(text, kFp);
    CHECK(a.evidence == "certified");
    CHECK(integer_invariants(a) == integer_invariants(b));
  }
}

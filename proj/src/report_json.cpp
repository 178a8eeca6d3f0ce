#include "planesyz/report_json.hpp"

namespace planesyz {
namespace {

template <typename T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const Json& j) {
  return j.is_null() ? std::nullopt : std::optional<T>(j.get<T>());
}

Json thm3_to_json(const Thm3Audit& t) {
  Json j;
  j["applicable"] = t.applicable;
  j["power"] = t.power;
  j["equal_degrees_and_bound"] = t.maximal_tjurina;
  j["linear_relations"] = t.linear_entries;
  j["ideal_is_power"] = t.ideal_is_power;
  j["ideal_equality_form"] = t.ideal_equality_form;
  j["minors_span_form"] = t.minors_span_form;
  j["hilbert_series_form"] = t.hilbert_series_form;
  j["tau_max"] = optional_to_json(t.tau_max);
  j["margin"] = optional_to_json(t.margin);
  return j;
}

Thm3Audit thm3_from_json(const Json& j) {
  Thm3Audit t;
  t.applicable = j.at("applicable").get<bool>();
  t.power = j.at("power").get<int>();
  t.maximal_tjurina = j.at("equal_degrees_and_bound").get<bool>();
  t.linear_entries = j.at("linear_relations").get<bool>();
  t.ideal_is_power = j.at("ideal_is_power").get<bool>();
  t.ideal_equality_form = j.at("ideal_equality_form").get<bool>();
  t.minors_span_form = j.at("minors_span_form").get<bool>();
  t.hilbert_series_form = j.at("hilbert_series_form").get<bool>();
  t.tau_max = optional_from_json<int64_t>(j.at("tau_max"));
  t.margin = optional_from_json<int64_t>(j.at("margin"));
  return t;
}

}  // namespace

Json series_to_json(const Series& s) {
  Json j;
  j["start"] = s.start;
  j["coeffs"] = s.coeffs;
  return j;
}

Series series_from_json(const Json& j) {
  return Series{j.at("start").get<int>(), j.at("coeffs").get<std::vector<int64_t>>()};
}

Json report_to_json(const CurveReport& r) {
  Json j;
  j["input"] = r.input;
  j["polynomial"] = r.polynomial;
  j["field"] = r.field;
  j["evidence"] = r.evidence;
  j["d"] = r.d;
  j["reduced"] = r.reduced;
  j["singular_scheme_dimension"] = r.singular_scheme_dimension;
  j["m"] = r.m;
  j["exponents"] = r.exponents;
  j["relation_degrees"] = r.relation_degrees;
  j["epsilons"] = r.epsilons;
  j["tau"] = r.tau;
  j["sigma"] = optional_to_json(r.sigma);
  j["nu"] = r.nu;
  j["T"] = r.T;
  j["n_vector"] = series_to_json(r.n_vector);
  j["hilbert"] = {{"milnor_algebra", series_to_json(r.milnor_algebra)},
                  {"pairing_quotient", series_to_json(r.pairing_quotient)},
                  {"fitting_quotient", series_to_json(r.fitting_quotient)}};
  j["classification"] = {{"labels", r.labels},
                         {"dpw_bound", optional_to_json(r.dpw_bound)},
                         {"maximal_tjurina", thm3_to_json(r.maximal_tjurina)}};
  Json audits = Json::array();
  for (const auto& a : r.audits)
    audits.push_back({{"name", a.name}, {"applicable", a.applicable}, {"passed", a.passed}, {"detail", a.detail}});
  j["audits"] = std::move(audits);
  j["warnings"] = r.warnings;
  if (r.verbose) {
    const auto& v = *r.verbose;
    j["verbose"] = {{"syzygies", v.syzygies}, {"pairings", v.pairings}, {"h_matrix", v.h_matrix},
                    {"minors", v.minors}};
  }
  if (r.timings) j["timings"] = *r.timings;
  return j;
}

CurveReport report_from_json(const Json& j) {
  try {
    CurveReport r;
    r.input = j.at("input").get<std::string>();
    r.polynomial = j.at("polynomial").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.evidence = j.at("evidence").get<std::string>();
    r.d = j.at("d").get<int>();
    r.reduced = j.at("reduced").get<bool>();
    r.singular_scheme_dimension = j.at("singular_scheme_dimension").get<int>();
    r.m = j.at("m").get<int>();
    r.exponents = j.at("exponents").get<std::vector<int>>();
    r.relation_degrees = j.at("relation_degrees").get<std::vector<int>>();
    r.epsilons = j.at("epsilons").get<std::vector<int>>();
    r.tau = j.at("tau").get<int64_t>();
    r.sigma = optional_from_json<int>(j.at("sigma"));
    r.nu = j.at("nu").get<int64_t>();
    r.T = j.at("T").get<int>();
    r.n_vector = series_from_json(j.at("n_vector"));
    const auto& h = j.at("hilbert");
    r.milnor_algebra = series_from_json(h.at("milnor_algebra"));
    r.pairing_quotient = series_from_json(h.at("pairing_quotient"));
    r.fitting_quotient = series_from_json(h.at("fitting_quotient"));
    const auto& c = j.at("classification");
    r.labels = c.at("labels").get<std::vector<std::string>>();
    r.dpw_bound = optional_from_json<int64_t>(c.at("dpw_bound"));
    r.maximal_tjurina = thm3_from_json(c.at("maximal_tjurina"));
    for (const auto& a : j.at("audits"))
      r.audits.push_back({a.at("name").get<std::string>(), a.at("applicable").get<bool>(),
                          a.at("passed").get<bool>(), a.at("detail").get<std::string>()});
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("verbose")) {
      const auto& v = j.at("verbose");
      r.verbose = VerboseData{v.at("syzygies").get<std::vector<std::vector<std::string>>>(),
                              v.at("pairings").get<std::map<std::string, std::string>>(),
                              v.at("h_matrix").get<std::vector<std::vector<std::string>>>(),
                              v.at("minors").get<std::map<std::string, std::string>>()};
    }
    if (j.contains("timings")) r.timings = j.at("timings").get<std::map<std::string, double>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace planesyz

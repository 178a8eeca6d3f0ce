#include "planesyz/report.hpp"

#include <chrono>
#include <sstream>

#include "planesyz/curve.hpp"
#include "planesyz/parse.hpp"

namespace planesyz {
namespace {

using Clock = std::chrono::steady_clock;

class Stages {
public:
  explicit Stages(bool enabled) : enabled_(enabled), last_(Clock::now()) {}
  void mark(const std::string& stage) {
    const auto now = Clock::now();
    if (enabled_) seconds_[stage] = std::chrono::duration<double>(now - last_).count();
    last_ = now;
  }
  std::optional<std::map<std::string, double>> result() const {
    return enabled_ ? std::optional(seconds_) : std::nullopt;
  }

private:
  bool enabled_;
  Clock::time_point last_;
  std::map<std::string, double> seconds_;
};

std::string pair_key(char prefix, std::pair<int, int> jk) {
  return prefix + std::to_string(jk.first) + std::to_string(jk.second);
}

template <typename F>
Submodule<F> product(const F& field, const Submodule<F>& a, const Submodule<F>& b) {
  using K = typename F::Elem;
  std::vector<Polynomial<K>> gens;
  for (const auto& p : a.polynomials())
    for (const auto& q : b.polynomials()) gens.push_back(p * q);
  return minimalize_generators(field, GradedSubmodule<K>::ideal(std::span<const Polynomial<K>>(gens)));
}

template <typename F>
bool contained_in(const F& field, const Submodule<F>& a, const Submodule<F>& b) {
  const auto gb = groebner_basis(field, b);
  for (const auto& g : a.generators)
    if (!gb.contains(g)) return false;
  return true;
}

template <typename F>
Submodule<F> unit_ideal(const F& field) {
  return GradedSubmodule<typename F::Elem>::ideal({Polynomial<typename F::Elem>::constant(field.one())});
}

template <typename F>
CurveReport run(const F& field, const IntPolynomial& integral, const std::string& input,
                const CoefficientField& descriptor, const AnalysisOptions& options) {
  using K = typename F::Elem;
  using Poly = Polynomial<K>;
  Stages stages(options.timings);

  CurveReport r;
  r.input = input;
  r.polynomial = integral.to_string();
  r.field = descriptor.to_string();
  r.evidence = descriptor.kind() == CoefficientField::Kind::Rationals ? "certified" : "modular evidence";
  if (!integral.is_zero() && integral.degree() > options.max_degree_guard)
    throw Error(ErrorKind::OutOfRange, "degree " + std::to_string(integral.degree()) +
                                           " exceeds the degree guard " + std::to_string(options.max_degree_guard));

  const Poly f = to_field(integral, field);
  r.d = validate_curve(field, f);
  r.reduced = true;
  r.warnings = field_warnings(field.characteristic(), r.d);
  const int d = r.d;
  stages.mark("validate");

  const auto ar = compute_AR(field, f);
  const Exponents& exp = ar.exponents;
  r.m = exp.m;
  r.exponents = exp.degrees;
  stages.mark("syzygies");

  const auto pairing = ideal_IC(ar.generators, f);
  stages.mark("pairings");

  const auto h = second_syzygy_matrix(field, ar.generators, d);
  const auto minors = signed_minors(h, field.one());
  std::vector<Poly> minor_list;
  for (const auto& [ab, minor] : minors) minor_list.push_back(minor);
  const auto fitt = GradedSubmodule<K>::ideal(std::span<const Poly>(minor_list));
  r.relation_degrees = h.row_degrees;
  r.epsilons = h.epsilons;
  stages.mark("second_syzygies");

  const auto jd = jacobian_module_data(field, f);
  r.tau = jd.tau;
  r.sigma = jd.sigma;
  r.nu = jd.nu;
  r.T = jd.T;
  r.n_vector = jd.n.trimmed();
  r.milnor_algebra = jd.milnor.dimensions(0, 3 * d);
  r.singular_scheme_dimension = jd.milnor.krull_dimension() - 1;
  stages.mark("jacobian_module");

  const auto ic_hilbert = hilbert_series(field, pairing.ideal);
  const auto fitt_hilbert = hilbert_series(field, fitt);
  r.pairing_quotient = ic_hilbert.finite_dimensions().value_or(ic_hilbert.dimensions(0, 3 * d));
  r.fitting_quotient = fitt_hilbert.finite_dimensions().value_or(fitt_hilbert.dimensions(0, 3 * d));

  Classification cls = classify(exp, jd);
  if (exp.m >= 3) cls.thm3 = thm3_audit(field, exp, h, pairing.ideal, minors, jd);
  r.labels = cls.labels(d, exp.mdr());
  r.dpw_bound = cls.dpw;
  r.maximal_tjurina = cls.thm3;
  stages.mark("classify");

  auto audit = [&](std::string name, bool applicable, bool passed, std::string detail = {}) {
    r.audits.push_back({std::move(name), applicable, applicable && passed, std::move(detail)});
  };

  {
    bool ok = true;
    std::string detail;
    for (const auto& [jk, g] : pairing.pairings) {
      const int expected = exp.degrees[jk.first - 1] + exp.degrees[jk.second - 1] + 1 - d;
      const auto& minor = minors.at(jk);
      auto fits = [&](const Poly& p) { return p.is_zero() || (p.is_homogeneous() && p.degree() == expected); };
      if (!fits(g) || !fits(minor)) {
        ok = false;
        detail = "degree mismatch at " + pair_key('g', jk);
      }
    }
    audit("degree-identities", true, ok, detail);
  }
  {
    std::string zero;
    for (const auto& [jk, g] : pairing.pairings)
      if (g.is_zero()) zero += " " + pair_key('g', jk);
    audit("pairings-nonzero", true, zero.empty(), zero.empty() ? "" : "zero:" + zero);
    zero.clear();
    for (const auto& [ab, minor] : minors)
      if (minor.is_zero()) zero += " " + pair_key('m', ab);
    audit("minors-nonzero", true, zero.empty(), zero.empty() ? "" : "zero:" + zero);
  }
  audit("pairing-ideal-equals-fitting", true, ideal_equal(field, pairing.ideal, fitt));
  {
    bool ok = true;
    for (auto p = pairing.pairings.begin(); ok && p != pairing.pairings.end(); ++p)
      for (auto q = std::next(p); ok && q != pairing.pairings.end(); ++q) {
        const Poly lhs = p->second * minors.at(q->first);
        const Poly rhs = q->second * minors.at(p->first);
        ok = lhs == rhs || lhs == -rhs;
      }
    audit("pairing-minor-proportionality", true, ok);
  }
  {
    const int dim = krull_dimension_of_quotient(field, pairing.ideal);
    const bool free = exp.m == 2;
    audit("pairing-ideal-primary", true, free ? dim == -1 : dim == 0,
          "Krull dimension of S/I(C) = " + std::to_string(dim));
  }
  audit("free-iff-nu-zero", true, (jd.nu == 0) == (exp.m == 2));
  {
    bool symmetric = true;
    for (int k = 0; k <= jd.T; ++k) symmetric = symmetric && jd.n.at(k) == jd.n.at(jd.T - k);
    audit("duality", true, symmetric, "T = " + std::to_string(jd.T));
  }
  {
    const auto jac_partials = partial_derivatives(f);
    const auto jac = GradedSubmodule<K>::ideal(std::span<const Poly>(jac_partials));
    const auto saturated = saturation(field, jac);
    const auto ann = ideal_quotient(field, jac, saturated);
    Submodule<F> power = unit_ideal(field);
    for (int i = 0; i < exp.m - 2; ++i) power = product(field, power, ann);
    const bool upper = contained_in(field, fitt, ann);
    const bool lower = contained_in(field, power, fitt);
    audit("fitting-inclusions", true, upper && lower,
          std::string("Fitt0 in Ann(N): ") + (upper ? "yes" : "no") + ", Ann(N)^(m-2) in Fitt0: " +
              (lower ? "yes" : "no"));
  }

  const bool three = exp.m == 3;
  if (three) {
    const auto formula = hilbert_series_N_formula(d, exp.degrees[0], exp.degrees[1], exp.degrees[2]);
    audit("three-syzygy-series", true, formula.dims == r.n_vector && jd.sigma == formula.sigma,
          "formula " + formula.dims.to_string());

    const auto& row = h.entries[0];
    const auto h_ideal = GradedSubmodule<K>::ideal(std::span<const Poly>(row));
    const bool same_ideal = ideal_equal(field, pairing.ideal, h_ideal);
    bool pattern = false;
    const Poly& g12 = pairing.pairings.at({1, 2});
    if (!row[2].is_zero() && !g12.is_zero()) {
      const K c = g12.leading_term().coeff * inverse(row[2].leading_term().coeff);
      pattern = g12 == row[2].scaled(c) && pairing.pairings.at({1, 3}) == row[1].scaled(-c) &&
                pairing.pairings.at({2, 3}) == row[0].scaled(c);
    }
    audit("three-syzygy-generators", true, same_ideal && pattern,
          std::string("I(C) = (h1,h2,h3): ") + (same_ideal ? "yes" : "no") +
              ", scalar pattern: " + (pattern ? "yes" : "no"));

    // Complete intersection of degrees a_i: numerator prod (1 - t^a_i).
    std::vector<int64_t> numerator{1};
    bool positive = true;
    for (int k = 0; k < 3; ++k) {
      const int a = h.entry_degree(0, k);
      if (a <= 0) {
        positive = false;
        break;
      }
      std::vector<int64_t> next(numerator.size() + a, 0);
      for (std::size_t i = 0; i < numerator.size(); ++i) {
        next[i] += numerator[i];
        next[i + a] -= numerator[i];
      }
      numerator = std::move(next);
    }
    const bool complete_intersection = positive && HilbertData(Series{0, numerator}) == ic_hilbert;
    const bool symmetric = r.pairing_quotient.is_symmetric() && ic_hilbert.krull_dimension() == 0;
    audit("three-syzygy-gorenstein", true, complete_intersection && symmetric,
          std::string("complete intersection: ") + (complete_intersection ? "yes" : "no") +
              ", symmetric: " + (symmetric ? "yes" : "no"));
  } else {
    audit("three-syzygy-series", false, false);
    audit("three-syzygy-generators", false, false);
    audit("three-syzygy-gorenstein", false, false);
  }
  audit("maximal-tjurina-equivalence", exp.m >= 3, cls.thm3.all_agree());
  try {
    const int shift = presentation_shift_check(field, h, jd.n);
    // For m = 3 the shift is sigma; otherwise existence is the check.
    audit("presentation-shift", true, !three || jd.sigma == shift, "shift " + std::to_string(shift));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoAligningShift) throw;
    audit("presentation-shift", true, false, e.what());
  }
  stages.mark("audits");

  if (options.verbose) {
    VerboseData v;
    for (const auto& rho : ar.generators)
      v.syzygies.push_back({rho.entries[0].to_string(), rho.entries[1].to_string(), rho.entries[2].to_string()});
    for (const auto& [jk, g] : pairing.pairings) v.pairings[pair_key('g', jk)] = g.to_string();
    for (const auto& row : h.entries) {
      std::vector<std::string> text;
      for (const auto& e : row) text.push_back(e.to_string());
      v.h_matrix.push_back(std::move(text));
    }
    for (const auto& [ab, minor] : minors) v.minors[pair_key('m', ab)] = minor.to_string();
    r.verbose = std::move(v);
  }
  r.timings = stages.result();
  return r;
}

}  // namespace

bool CurveReport::audits_passed() const {
  for (const auto& a : audits)
    if (a.applicable && !a.passed) return false;
  return true;
}

CurveReport analyze(const IntPolynomial& f, const std::string& input, const CoefficientField& field,
                    const AnalysisOptions& options) {
  if (field.kind() == CoefficientField::Kind::Rationals) return run(RationalField{}, f, input, field, options);
  return run(field.prime_field(), f, input, field, options);
}

CurveReport analyze_text(const std::string& text, const CoefficientField& field, const AnalysisOptions& options) {
  return analyze(parse_polynomial(text), text, field, options);
}

std::string render_text(const CurveReport& r) {
  std::ostringstream out;
  auto list = [](const auto& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s.empty() ? std::string("-") : s;
  };
  auto row = [&](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 36 ? 36 - key.size() : 1, ' ') << value << '\n';
  };
  row("curve", r.polynomial);
  row("field", r.field + " (" + r.evidence + ")");
  row("degree", std::to_string(r.d));
  row("m", std::to_string(r.m));
  row("exponents", list(r.exponents));
  row("relation degrees e", list(r.relation_degrees));
  row("epsilons", list(r.epsilons));
  row("tau", std::to_string(r.tau));
  row("sigma", r.sigma ? std::to_string(*r.sigma) : "-");
  row("nu", std::to_string(r.nu));
  row("T", std::to_string(r.T));
  row("n(f)", r.n_vector.to_string());
  row("H(S/J_f) to 3d", r.milnor_algebra.to_string());
  row("H(S/I(C))", r.pairing_quotient.to_string());
  row("H(S/Fitt0)", r.fitting_quotient.to_string());
  std::string labels;
  for (const auto& l : r.labels) labels += (labels.empty() ? "" : ", ") + l;
  row("labels", labels);
  row("dPW bound", r.dpw_bound ? std::to_string(*r.dpw_bound) : "- (d1 < d/2)");
  const auto& t = r.maximal_tjurina;
  if (t.applicable) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    row("maximal Tjurina", std::string("(1) ") + yn(t.maximal_tjurina) + "  (2) " + yn(t.linear_entries) +
                               "  (3) " + yn(t.ideal_is_power) + "  (4) " + yn(t.hilbert_series_form));
    if (t.margin) row("tau_max - tau", std::to_string(*t.margin));
  }
  for (const auto& a : r.audits) {
    if (!a.applicable) continue;
    row("audit " + a.name, std::string(a.passed ? "pass" : "FAIL") + (a.detail.empty() ? "" : "  " + a.detail));
  }
  if (r.verbose) {
    for (std::size_t i = 0; i < r.verbose->syzygies.size(); ++i) {
      const auto& s = r.verbose->syzygies[i];
      row("rho" + std::to_string(i + 1), "(" + s[0] + ", " + s[1] + ", " + s[2] + ")");
    }
    for (const auto& [k, v] : r.verbose->pairings) row(k, v);
    for (std::size_t i = 0; i < r.verbose->h_matrix.size(); ++i) {
      std::string text;
      for (const auto& e : r.verbose->h_matrix[i]) text += (text.empty() ? "" : ", ") + e;
      row("H row " + std::to_string(i + 1), "[" + text + "]");
    }
    for (const auto& [k, v] : r.verbose->minors) row(k, v);
  }
  for (const auto& w : r.warnings) row("warning", w);
  if (r.timings)
    for (const auto& [stage, s] : *r.timings) row("time " + stage, std::to_string(s) + " s");
  return out.str();
}

IntegerInvariants integer_invariants(const CurveReport& r) {
  IntegerInvariants out{r.d, r.m, r.exponents, r.relation_degrees, r.epsilons, r.tau, r.sigma, r.nu, r.T,
                        r.n_vector, r.milnor_algebra, r.pairing_quotient, r.fitting_quotient, r.labels, {}, {}};
  const auto& t = r.maximal_tjurina;
  out.maximal_tjurina_flags = {t.applicable, t.maximal_tjurina, t.linear_entries, t.ideal_is_power,
                               t.hilbert_series_form};
  for (const auto& a : r.audits) out.audits.emplace_back(a.name, a.passed);
  return out;
}

}  // namespace planesyz

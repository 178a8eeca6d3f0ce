// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "planesyz/classifier.hpp"
#include "planesyz/families.hpp"
#include "planesyz/report.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace planesyz;

namespace {

const PrimeField kF{1048583};
using Poly = Polynomial<Fp>;

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) why << what;
    ok = ok && condition;
  }
};

struct Pipeline {
  std::string label;
  Poly f;
  int d = 0;
  SyzygyModule<Fp> ar;
  PairingIdeal<Fp> ic;
  SecondSyzygyData<Fp> h;
  std::map<std::pair<int, int>, Poly> minors;
  GradedSubmodule<Fp> fitt;
  JacobianModuleData jd;

  explicit Pipeline(const corpus::Curve& c) : label(c.label()), f(to_field(c.polynomial(), kF)) {
    d = validate_curve(kF, f);
    ar = compute_AR(kF, f);
    ic = ideal_IC(ar.generators, f);
    h = second_syzygy_matrix(kF, ar.generators, d);
    minors = signed_minors(h, kF.one());
    fitt = fitting_ideal_N(kF, h);
    jd = jacobian_module_data(kF, f);
  }
  Thm3Audit audit() const { return thm3_audit(kF, ar.exponents, h, ic.ideal, minors, jd); }
};

const std::vector<Pipeline>& corpus_runs() {
  static const std::vector<Pipeline> runs = [] {
    std::vector<Pipeline> out;
    for (const auto& c : corpus::all()) out.emplace_back(c);
    return out;
  }();
  return runs;
}

const Pipeline& run_of(const std::string& label) {
  for (const auto& p : corpus_runs())
    if (p.label == label) return p;
  throw std::runtime_error("no corpus curve " + label);
}

// The closed formula term by term, with the binomial counted.
int64_t dpw_brute_force(int d, int d1) {
  int64_t value = int64_t(d - 1) * (d - d1 - 1) + int64_t(d1) * d1;
  for (int i = 0; i < 2 * d1 - d + 2; ++i)
    for (int j = i + 1; j < 2 * d1 - d + 2; ++j) --value;
  return value;
}

void criterion1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = analyze(family("ex2", {}), "ex2", CoefficientField::parse("fp:1048583"));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(r.m == 5, "m");
  o.expect(r.exponents == std::vector{6, 6, 6, 6, 6}, "exponents");
  o.expect(r.tau == 12, "tau");
  o.expect(r.n_vector == Series{4, {3, 9, 13, 15, 15, 13, 9, 3}}, "n-vector " + r.n_vector.to_string());
  o.expect(r.pairing_quotient == Series{0, {1, 3, 6, 10, 15, 21, 18, 6}}, "H(S/I(C))");
  o.expect(!r.pairing_quotient.is_symmetric(), "S/I(C) symmetric");
  o.expect(seconds < 30.0, "runtime");
  o.why << (o.ok ? "" : "; ") << "ex2 in " << seconds << " s";
}

void criterion2(Outcome& o) {
  for (const auto& p : corpus_runs()) o.expect(ideal_equal(kF, p.ic.ideal, p.fitt), p.label + " ");
  o.why << (o.ok ? "" : "; ") << corpus_runs().size() << " curves";
}

void criterion3(Outcome& o) {
  for (const auto& c : corpus::fermat()) {
    const auto& p = run_of(c.label());
    const auto& e = p.ar.exponents.degrees;
    o.expect(p.ar.exponents.m == 3, p.label + " m ");
    if (p.ar.exponents.m != 3) continue;
    const auto formula = hilbert_series_N_formula(p.d, e[0], e[1], e[2]);
    for (int k = 0; k <= p.jd.T + 1; ++k)
      o.expect(formula.dims.at(k) == p.jd.n.at(k), p.label + " n_" + std::to_string(k) + " ");
    const auto& row = p.h.entries[0];
    o.expect(ideal_equal(kF, p.ic.ideal, GradedSubmodule<Fp>::ideal({row[0], row[1], row[2]})),
             p.label + " I(C) != (h1,h2,h3) ");
    const Poly& g12 = p.ic.pairings.at({1, 2});
    const Poly& g13 = p.ic.pairings.at({1, 3});
    const Poly& g23 = p.ic.pairings.at({2, 3});
    if (row[2].is_zero() || g12.is_zero()) {
      o.expect(false, p.label + " zero entry ");
      continue;
    }
    const Fp scale = g12.leading_term().coeff * row[2].leading_term().coeff.inverse();
    o.expect(g12 == row[2].scaled(scale) && g13 == -row[1].scaled(scale) && g23 == row[0].scaled(scale),
             p.label + " scalar pattern ");
  }
  o.why << (o.ok ? "" : "; ") << "fermat d=3,4,5";
}

void criterion4(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : corpus::maximal_tjurina()) {
    const auto& p = run_of(c.label());
    const auto& e = p.ar.exponents;
    const auto a = p.audit();
    o.expect(a.maximal_tjurina && a.linear_entries && a.ideal_is_power && a.hilbert_series_form && a.all_agree(),
             p.label + " characterizations ");
    const int power = c.name == "odd-m4" ? 2 : p.d - 1;
    o.expect(ideal_equal(kF, p.ic.ideal, power_of_maximal_ideal(kF, power)), p.label + " I(C) power ");
    o.expect(p.jd.tau == dpw_brute_force(p.d, e.mdr()), p.label + " tau vs brute force ");
    o.expect(dpw_bound(p.d, e.mdr()) == dpw_brute_force(p.d, e.mdr()), p.label + " dpw_bound ");
  }
  for (const auto& label : {"ex2", "fermat d=3", "fermat d=4", "fermat d=5"}) {
    const auto a = run_of(label).audit();
    o.expect(a.applicable && !a.maximal_tjurina && !a.linear_entries && !a.ideal_is_power &&
                 !a.hilbert_series_form && a.all_agree(),
             std::string(label) + " should fail all four ");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(seconds < 120.0, "runtime ");
  o.why << (o.ok ? "" : "; ") << "6 maximal, 4 non-maximal";
}

void criterion5(Outcome& o) {
  for (const auto& p : corpus_runs()) {
    const auto& e = p.ar.exponents.degrees;
    const int m = p.ar.exponents.m;
    for (const auto& [jk, g] : p.ic.pairings) {
      o.expect(!g.is_zero(), p.label + " g_jk = 0 ");
      if (!g.is_zero()) o.expect(g.degree() == e[jk.first - 1] + e[jk.second - 1] + 1 - p.d, p.label + " deg g ");
    }
    for (const auto& [ab, mab] : p.minors) {
      o.expect(!mab.is_zero(), p.label + " m_ab = 0 ");
      if (!mab.is_zero()) o.expect(mab.degree() == e[ab.first - 1] + e[ab.second - 1] + 1 - p.d, p.label + " deg m ");
    }
    int eps_sum = 0;
    for (int j = 0; j < p.h.rows(); ++j) {
      o.expect(p.h.epsilons[j] >= 1, p.label + " eps ");
      o.expect(p.h.row_degrees[j] == p.d + e[j + 2] - 1 + p.h.epsilons[j], p.label + " e_j ");
      eps_sum += p.h.epsilons[j];
    }
    if (m >= 3) o.expect(e[0] + e[1] == p.d - 1 + eps_sum, p.label + " sum eps ");
    const int T = 3 * (p.d - 2);
    o.expect(p.jd.T == T, p.label + " T ");
    for (int k = 0; k <= T; ++k) o.expect(p.jd.n.at(k) == p.jd.n.at(T - k), p.label + " duality ");
    if (m > 2) o.expect(krull_dimension_of_quotient(kF, p.ic.ideal) == 0, p.label + " not m-primary ");
    o.expect((p.jd.nu == 0) == (m == 2), p.label + " nu/m ");
    for (const auto& [jk, gjk] : p.ic.pairings)
      for (const auto& [ab, gab] : p.ic.pairings) {
        const Poly lhs = gjk * p.minors.at(ab), rhs = gab * p.minors.at(jk);
        o.expect(lhs == rhs || lhs == -rhs, p.label + " proportionality ");
      }
  }
  o.why << (o.ok ? "" : "; ") << corpus_runs().size() << " curves";
}

void criterion6(Outcome& o) {
  for (const auto& p : corpus_runs()) {
    const auto partials = partial_derivatives(p.f);
    std::vector<ModuleElement<Fp>> elems;
    for (const auto& g : partials) elems.push_back(ModuleElement<Fp>::from_polynomial(g));
    const auto syz = syzygy_basis(kF, FreeModule::ring(), std::span<const ModuleElement<Fp>>(elems));
    std::vector<oracle::Vec> images;
    for (const auto& g : partials) images.push_back({{oracle::from_library(g)}, p.d - 1});
    std::vector<oracle::Vec> gens;
    for (const auto& s : syz.generators) {
      oracle::Vec v;
      for (uint32_t i = 0; i < 3; ++i) v.comps.push_back(oracle::from_library(s.component(i)));
      v.degree = s.degree(syz.module);
      gens.push_back(std::move(v));
    }
    std::vector<oracle::Poly> jacobian;
    for (const auto& g : partials) jacobian.push_back(oracle::from_library(g));
    for (int k = 0; k <= 3 * p.d; ++k) {
      o.expect(oracle::span_dimension(gens, syz.module.shifts, k, kF.p) ==
                   oracle::kernel_dimension(images, {0}, k, kF.p),
               p.label + " syzygies in degree " + std::to_string(k) + " ");
      const auto sat = oracle::saturation_dimension(jacobian, p.d - 1, k, 3 * (p.d - 2), kF.p);
      o.expect(int64_t(oracle::monomials(k).size() - sat) == p.jd.saturated.dimension(k),
               p.label + " saturation in degree " + std::to_string(k) + " ");
    }
  }
  o.why << (o.ok ? "" : "; ") << "degrees 0..3d on " << corpus_runs().size() << " curves";
}

void criterion7(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto qq = CoefficientField::rationals(), fp = CoefficientField::parse("fp:1048583");
  for (const auto& c : corpus::all()) {
    const auto a = analyze(c.polynomial(), c.label(), qq), b = analyze(c.polynomial(), c.label(), fp);
    o.expect(integer_invariants(a) == integer_invariants(b), c.label() + " ");
    o.expect(a.audits_passed(), c.label() + " audits over QQ ");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(seconds < 600.0, "runtime ");
  o.why << (o.ok ? "" : "; ") << "QQ and F_p in " << seconds << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"ex2 reproduction", criterion1},
      {"pairing ideal equals Fitting ideal on the corpus", criterion2},
      {"three-syzygy series and generators", criterion3},
      {"maximal Tjurina characterizations", criterion4},
      {"property suite", criterion5},
      {"oracle equivalence", criterion6},
      {"field agreement", criterion7},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.why << "exception: " << e.what();
    }
    std::printf("criterion %zu: %s %s (%s)\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first, o.why.str().c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}

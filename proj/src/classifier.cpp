#include "planesyz/classifier.hpp"

#include <algorithm>

#include "planesyz/linalg.hpp"

namespace planesyz {
namespace {

int64_t choose2(int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

bool condition_one(const Exponents& exp, int64_t tau, std::optional<int64_t>& bound) {
  const int d = exp.d, d1 = exp.mdr();
  bound.reset();
  if (2 * d1 < d || d1 > d - 1) return false;
  bound = dpw_bound(d, d1);
  const bool equal_degrees =
      std::all_of(exp.degrees.begin(), exp.degrees.end(), [&](int di) { return di == d1; });
  return equal_degrees && exp.m == 2 * d1 - d + 3 && tau == *bound;
}

}  // namespace

int64_t dpw_bound(int d, int d1) {
  if (d < 2 || 2 * d1 < d || d1 > d - 1)
    throw Error(ErrorKind::OutOfRegime, "need d/2 <= d1 <= d-1, got d=" + std::to_string(d) +
                                            ", d1=" + std::to_string(d1));
  return int64_t(d - 1) * (d - d1 - 1) + int64_t(d1) * d1 - choose2(2 * d1 - d + 2);
}

std::vector<std::string> Classification::labels(int d, int d1) const {
  std::vector<std::string> out{std::to_string(m) + "-syzygy"};
  if (free) out.push_back("free");
  if (three_syzygy) out.push_back("three-syzygy");
  if (plus_one_generated) out.push_back("plus-one-generated");
  if (nearly_free) out.push_back("nearly-free");
  if (maximal_tjurina) out.push_back("maximal-tjurina(" + std::to_string(d) + "," + std::to_string(d1) + ")");
  return out;
}

Classification classify(const Exponents& exp, const JacobianModuleData& jd) {
  Classification c;
  const int d = exp.d;
  c.m = exp.m;
  c.free = exp.m == 2;
  c.three_syzygy = exp.m == 3;
  c.plus_one_generated = c.three_syzygy && exp.degrees[0] + exp.degrees[1] == d;
  c.nearly_free = c.plus_one_generated && exp.degrees[1] == exp.degrees[2];
  if (!c.free) c.maximal_tjurina = condition_one(exp, jd.tau, c.dpw);
  else if (2 * exp.mdr() >= d && exp.mdr() <= d - 1) c.dpw = dpw_bound(d, exp.mdr());

  if (c.free != (jd.nu == 0))
    throw Error(ErrorKind::InternalInconsistency,
                "m = " + std::to_string(exp.m) + " but nu = " + std::to_string(jd.nu));
  if (c.nearly_free != (jd.nu == 1))
    throw Error(ErrorKind::InternalInconsistency, std::string("nearly-free is ") +
                                                      (c.nearly_free ? "true" : "false") +
                                                      " but nu = " + std::to_string(jd.nu));
  return c;
}

template <typename F>
Thm3Audit thm3_audit(const F& field, const Exponents& exp, const SecondSyzygyData<typename F::Elem>& h,
                     const GradedSubmodule<typename F::Elem>& ic,
                     const std::map<std::pair<int, int>, Polynomial<typename F::Elem>>& minors,
                     const JacobianModuleData& jd) {
  using K = typename F::Elem;
  Thm3Audit a;
  if (exp.m < 3) return a;
  a.applicable = true;
  const int d = exp.d, d1 = exp.mdr();
  a.power = 2 * d1 - d + 1;

  // (1)
  a.maximal_tjurina = condition_one(exp, jd.tau, a.tau_max);
  if (a.tau_max) a.margin = *a.tau_max - jd.tau;

  // (2): every entry of H is a linear form.
  a.linear_entries = h.rows() > 0;
  for (int i = 0; i < h.rows(); ++i)
    for (int k = 0; k < h.columns(); ++k) {
      const auto& e = h.entries[i][k];
      if (h.entry_degree(i, k) != 1 || (!e.is_zero() && e.degree() != 1)) a.linear_entries = false;
    }

  // (3) as an ideal equality and as a spanning statement.
  if (a.power >= 0) {
    a.ideal_equality_form = ideal_equal(field, ic, power_of_maximal_ideal(field, a.power));
    std::vector<Polynomial<K>> forms;
    bool right_degree = true;
    for (const auto& [ab, minor] : minors) {
      if (minor.is_zero() || !minor.is_homogeneous() || minor.degree() != a.power) right_degree = false;
      forms.push_back(minor);
    }
    a.minors_span_form = right_degree && matrix_rank(coefficient_rows(forms, a.power, field.zero())) ==
                                             int(Monomial::count_in_degree(a.power));
  }
  if (a.ideal_equality_form != a.minors_span_form)
    throw Error(ErrorKind::EquivalenceViolated, "I(C) = m^k disagrees with the minors spanning S_k");
  a.ideal_is_power = a.ideal_equality_form;

  // (4)
  const auto dims = hilbert_series(field, ic).finite_dimensions();
  Series expected{0, {}};
  for (int i = 0; i <= a.power - 1; ++i) expected.coeffs.push_back(choose2(i + 2));
  a.hilbert_series_form = dims && *dims == expected;

  if (!a.all_agree())
    throw Error(ErrorKind::EquivalenceViolated,
                std::string("characterizations disagree: (1)=") + (a.maximal_tjurina ? "1" : "0") +
                    " (2)=" + (a.linear_entries ? "1" : "0") + " (3)=" + (a.ideal_is_power ? "1" : "0") +
                    " (4)=" + (a.hilbert_series_form ? "1" : "0"));
  return a;
}

template Thm3Audit thm3_audit<PrimeField>(const PrimeField&, const Exponents&, const SecondSyzygyData<Fp>&,
                                          const GradedSubmodule<Fp>&,
                                          const std::map<std::pair<int, int>, Polynomial<Fp>>&,
                                          const JacobianModuleData&);
template Thm3Audit thm3_audit<RationalField>(const RationalField&, const Exponents&,
                                             const SecondSyzygyData<mpq_class>&, const GradedSubmodule<mpq_class>&,
                                             const std::map<std::pair<int, int>, Polynomial<mpq_class>>&,
                                             const JacobianModuleData&);

}  // namespace planesyz

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planesyz/groebner.hpp"
#include "planesyz/hilbert.hpp"
#include "planesyz/polynomial.hpp"

namespace planesyz {

/// (a, b, c) with a f_x + b f_y + c f_z = 0, all entries forms of `degree`.
template <typename K>
struct SyzygyVector {
  std::array<Polynomial<K>, 3> entries;
  int degree = 0;
};

/// Degrees d_1 <= ... <= d_m of a minimal generating set of AR(f).
struct Exponents {
  int d = 0;
  int m = 0;
  std::vector<int> degrees;

  int mdr() const { return degrees.front(); }
};

template <typename K>
struct SyzygyModule {
  std::vector<SyzygyVector<K>> generators;
  Exponents exponents;
};

/// Labelled generators g_jk = phi(rho_j, rho_k) of I(C), keyed by 1-based
/// (j, k) with j < k.
template <typename K>
struct PairingIdeal {
  std::map<std::pair<int, int>, Polynomial<K>> pairings;
  GradedSubmodule<K> ideal;
};

/// The (m-2) x m matrix H of relations R_i = sum_k h_ik rho_k = 0 among
/// the minimal generators, with its degree bookkeeping.
template <typename K>
struct SecondSyzygyData {
  int d = 0;
  std::vector<int> column_degrees;  // d_1..d_m
  std::vector<std::vector<Polynomial<K>>> entries;
  std::vector<int> row_degrees;  // e_1 <= ... <= e_{m-2}
  std::vector<int> epsilons;

  int rows() const { return int(entries.size()); }
  int columns() const { return int(column_degrees.size()); }
  /// deg h_ik = e_i - d_k + 1 - d.
  int entry_degree(int i, int k) const { return row_degrees[i] - column_degrees[k] + 1 - d; }
};

/// Graded pieces of the Jacobian module N(f) = I_f / J_f and the numbers
/// read from them.
struct JacobianModuleData {
  int T = 0;
  Series n;  // n(f)_k for k = 0..T
  std::optional<int> sigma;  // absent when N(f) = 0
  int64_t nu = 0;
  int64_t tau = 0;
  HilbertData milnor;  // H(S/J_f)
  HilbertData saturated;  // H(S/I_f)
  int saturation_steps = 0;
};

struct NFormula {
  Series dims;
  int sigma = 0;
};

/// Confirms f defines a reduced plane curve of degree >= 2 that is not a cone,
/// and returns d. Throws NotHomogeneous, DegreeTooSmall, FieldTooSmall,
/// NonReduced or ConeCurve.
template <typename F>
int validate_curve(const F& field, const Polynomial<typename F::Elem>& f);

/// Warnings about the coefficient field for degree d (empty when none).
std::vector<std::string> field_warnings(unsigned long characteristic, int d);

template <typename F>
SyzygyModule<typename F::Elem> compute_AR(const F& field, const Polynomial<typename F::Elem>& f);

/// det(E, r1, r2) / f.
template <typename K>
Polynomial<K> phi_pairing(const SyzygyVector<K>& r1, const SyzygyVector<K>& r2, const Polynomial<K>& f) {
  const K& lc = f.leading_term().coeff;
  const K one = lc * inverse(lc);
  std::array<std::array<Polynomial<K>, 3>, 3> rows{
      {{Polynomial<K>::variable(0, one), Polynomial<K>::variable(1, one), Polynomial<K>::variable(2, one)},
       r1.entries,
       r2.entries}};
  return exact_divide(det3(rows), f);
}

template <typename K>
PairingIdeal<K> ideal_IC(const std::vector<SyzygyVector<K>>& rhos, const Polynomial<K>& f) {
  PairingIdeal<K> out;
  std::vector<Polynomial<K>> gens;
  for (std::size_t j = 0; j < rhos.size(); ++j)
    for (std::size_t k = j + 1; k < rhos.size(); ++k) {
      Polynomial<K> g = phi_pairing(rhos[j], rhos[k], f);
      out.pairings[{int(j) + 1, int(k) + 1}] = g;
      gens.push_back(std::move(g));
    }
  out.ideal = GradedSubmodule<K>::ideal(std::span<const Polynomial<K>>(gens));
  return out;
}

/// Minimal relations among rho_1..rho_m. For a free curve (m = 2) the
/// matrix has no rows. Throws InternalInconsistency when the number of
/// minimal relations is not m - 2 or the degree identities fail.
template <typename F>
SecondSyzygyData<typename F::Elem> second_syzygy_matrix(const F& field,
                                                         const std::vector<SyzygyVector<typename F::Elem>>& rhos,
                                                         int d);

/// m_ab = (-1)^(a+b) det H_ab for 1-based a < b, where H_ab drops columns
/// a and b. An empty H gives m_12 = -1.
template <typename K>
std::map<std::pair<int, int>, Polynomial<K>> signed_minors(const SecondSyzygyData<K>& h, const K& one);

/// Ideal of all signed minors; the unit ideal for a free curve.
template <typename F>
GradedSubmodule<typename F::Elem> fitting_ideal_N(const F& field, const SecondSyzygyData<typename F::Elem>& h);

template <typename F>
JacobianModuleData jacobian_module_data(const F& field, const Polynomial<typename F::Elem>& f);

/// Closed form of H(N(f); t) for a 3-syzygy curve with exponents d1<=d2<=d3.
NFormula hilbert_series_N_formula(int d, int d1, int d2, int d3);

/// Finds the degree shift s with coker(H)_k = n(f)_{k+s}, where coker(H) is
/// the module presented by the columns of H in a free module whose i-th
/// generator has degree e_1 - e_i. Throws NoAligningShift.
template <typename F>
int presentation_shift_check(const F& field, const SecondSyzygyData<typename F::Elem>& h, const Series& n);

}  // namespace planesyz

#include "planesyz/curve.hpp"

#include <algorithm>

#include "planesyz/linalg.hpp"

namespace planesyz {
namespace {

template <typename K>
std::vector<ModuleElement<K>> as_ring_elements(std::span<const Polynomial<K>> polys) {
  std::vector<ModuleElement<K>> out;
  for (const auto& p : polys) out.push_back(ModuleElement<K>::from_polynomial(p));
  return out;
}

template <typename K>
GradedSubmodule<K> jacobian_ideal(const Polynomial<K>& f) {
  auto partials = partial_derivatives(f);
  return GradedSubmodule<K>::ideal(std::span<const Polynomial<K>>(partials));
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorKind::InternalInconsistency, what);
}

}  // namespace

std::vector<std::string> field_warnings(unsigned long characteristic, int d) {
  std::vector<std::string> out;
  if (characteristic != 0 && characteristic <= static_cast<unsigned long>(d) * d)
    out.push_back("characteristic " + std::to_string(characteristic) + " <= d^2 = " +
                  std::to_string(d * d) + "; results are modular evidence only");
  return out;
}

template <typename F>
int validate_curve(const F& field, const Polynomial<typename F::Elem>& f) {
  using K = typename F::Elem;
  if (f.is_zero()) throw Error(ErrorKind::DegreeTooSmall, "the zero polynomial defines no curve");
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "f must be a form");
  const int d = f.degree();
  if (d < 2) throw Error(ErrorKind::DegreeTooSmall, "degree " + std::to_string(d) + " < 2");
  const unsigned long p = field.characteristic();
  if (p != 0 && p <= 2ul * unsigned(d))
    throw Error(ErrorKind::FieldTooSmall, "characteristic " + std::to_string(p) + " <= 2d = " +
                                              std::to_string(2 * d));

  // A reduced curve has a finite singular scheme: S/J_f has Krull dimension <= 1.
  const GradedSubmodule<K> jac = jacobian_ideal(f);
  const int dim = krull_dimension_of_quotient(field, jac);
  if (dim > 1) throw Error(ErrorKind::NonReduced, "the Jacobian scheme has positive dimension");

  // A degree-0 syzygy is a linear dependence among the partials.
  const auto partials = partial_derivatives(f);
  std::vector<Polynomial<K>> forms(partials.begin(), partials.end());
  if (matrix_rank(coefficient_rows(forms, d - 1, field.zero())) < 3)
    throw Error(ErrorKind::ConeCurve, "the partial derivatives are linearly dependent (d_1 = 0)");
  return d;
}

template <typename F>
SyzygyModule<typename F::Elem> compute_AR(const F& field, const Polynomial<typename F::Elem>& f) {
  using K = typename F::Elem;
  const int d = validate_curve(field, f);
  const auto partials = partial_derivatives(f);
  const auto gens = as_ring_elements<K>(partials);
  auto syz = syzygy_basis(field, FreeModule::ring(), std::span<const ModuleElement<K>>(gens));
  auto minimal = minimalize_generators(field, syz);

  SyzygyModule<K> out;
  out.exponents.d = d;
  for (const auto& g : minimal.generators) {
    SyzygyVector<K> v;
    auto comps = g.components(3);
    std::copy(comps.begin(), comps.end(), v.entries.begin());
    v.degree = g.degree(minimal.module) - (d - 1);
    out.exponents.degrees.push_back(v.degree);
    out.generators.push_back(std::move(v));
  }
  out.exponents.m = int(out.generators.size());
  if (out.exponents.m < 2) inconsistent("AR(f) has rank two but fewer than two generators were found");
  if (out.exponents.mdr() < 1) throw Error(ErrorKind::ConeCurve, "AR(f) has a degree-0 syzygy");
  if (!std::is_sorted(out.exponents.degrees.begin(), out.exponents.degrees.end()))
    inconsistent("exponents not sorted");
  return out;
}

template <typename F>
SecondSyzygyData<typename F::Elem> second_syzygy_matrix(const F& field,
                                                         const std::vector<SyzygyVector<typename F::Elem>>& rhos,
                                                         int d) {
  using K = typename F::Elem;
  const int m = int(rhos.size());
  SecondSyzygyData<K> h;
  h.d = d;
  for (const auto& r : rhos) h.column_degrees.push_back(r.degree);

  const FreeModule ambient = FreeModule::graded({0, 0, 0});
  std::vector<ModuleElement<K>> gens;
  for (const auto& r : rhos)
    gens.push_back(ModuleElement<K>::from_components(ambient, std::span<const Polynomial<K>>(r.entries)));
  auto syz = syzygy_basis(field, ambient, std::span<const ModuleElement<K>>(gens));
  auto minimal = minimalize_generators(field, syz);

  if (int(minimal.generators.size()) != m - 2)
    inconsistent("expected " + std::to_string(m - 2) + " minimal second syzygies, found " +
                 std::to_string(minimal.generators.size()));
  for (const auto& g : minimal.generators) {
    h.entries.push_back(g.components(m));
    h.row_degrees.push_back(g.degree(minimal.module) + d - 1);
  }

  int eps_sum = 0;
  for (int j = 0; j < m - 2; ++j) {
    const int eps = h.row_degrees[j] - d - h.column_degrees[j + 2] + 1;
    if (eps < 1) inconsistent("epsilon_" + std::to_string(j + 1) + " = " + std::to_string(eps) + " < 1");
    h.epsilons.push_back(eps);
    eps_sum += eps;
  }
  if (m >= 2 && h.column_degrees[0] + h.column_degrees[1] != d - 1 + eps_sum)
    inconsistent("d_1 + d_2 != d - 1 + sum(epsilon)");
  for (int i = 0; i < h.rows(); ++i)
    for (int k = 0; k < m; ++k) {
      const auto& e = h.entries[i][k];
      if (!e.is_zero() && e.degree() != h.entry_degree(i, k))
        inconsistent("deg h_" + std::to_string(i + 1) + std::to_string(k + 1) + " disagrees with e_i - d_k + 1 - d");
    }
  return h;
}

template <typename K>
std::map<std::pair<int, int>, Polynomial<K>> signed_minors(const SecondSyzygyData<K>& h, const K& one) {
  const int rows = h.rows();
  const int m = h.columns();
  // Laplace expansion along the topmost unused row, memoized on the column
  // subset so all minors share their sub-determinants.
  std::map<uint32_t, Polynomial<K>> memo;
  auto det = [&](auto&& self, uint32_t cols) -> Polynomial<K> {
    const int size = std::popcount(cols);
    if (size == 0) return Polynomial<K>::constant(one);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    const int row = rows - size;
    Polynomial<K> total;
    int position = 0;
    for (int c = 0; c < m; ++c) {
      if (!(cols >> c & 1)) continue;
      const auto& entry = h.entries[row][c];
      if (!entry.is_zero()) {
        Polynomial<K> term = entry * self(self, cols & ~(1u << c));
        total = position % 2 == 0 ? total + term : total - term;
      }
      ++position;
    }
    memo.emplace(cols, total);
    return total;
  };

  std::map<std::pair<int, int>, Polynomial<K>> out;
  const uint32_t all = m >= 32 ? ~0u : (1u << m) - 1;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Polynomial<K> minor = det(det, all & ~(1u << a) & ~(1u << b));
      // 1-based sign (-1)^(a+b) equals the 0-based one.
      out[{a + 1, b + 1}] = (a + b) % 2 == 0 ? minor : -minor;
    }
  return out;
}

template <typename F>
GradedSubmodule<typename F::Elem> fitting_ideal_N(const F& field, const SecondSyzygyData<typename F::Elem>& h) {
  using K = typename F::Elem;
  std::vector<Polynomial<K>> gens;
  for (auto& [ab, minor] : signed_minors(h, field.one())) gens.push_back(minor);
  return GradedSubmodule<K>::ideal(std::span<const Polynomial<K>>(gens));
}

template <typename F>
JacobianModuleData jacobian_module_data(const F& field, const Polynomial<typename F::Elem>& f) {
  using K = typename F::Elem;
  const int d = validate_curve(field, f);
  const GradedSubmodule<K> jac = jacobian_ideal(f);

  JacobianModuleData out;
  out.T = 3 * (d - 2);
  out.milnor = hilbert_series(field, jac);
  const auto sat = saturation(field, jac, &out.saturation_steps);
  out.saturated = hilbert_series(field, sat);

  out.n.start = 0;
  for (int k = 0; k <= out.T; ++k) out.n.coeffs.push_back(out.milnor.dimension(k) - out.saturated.dimension(k));
  for (int k = out.T + 1; k <= 4 * d; ++k)
    if (out.milnor.dimension(k) != out.saturated.dimension(k))
      inconsistent("N(f) is nonzero in degree " + std::to_string(k) + " > T = " + std::to_string(out.T));
  for (int k = 0; k <= out.T; ++k)
    if (out.n.at(k) != out.n.at(out.T - k))
      inconsistent("n(f)_" + std::to_string(k) + " != n(f)_" + std::to_string(out.T - k) +
                   "; self-duality with T = 3(d-2) fails");

  for (int k = 0; k <= out.T; ++k) {
    if (out.n.at(k) != 0 && !out.sigma) out.sigma = k;
    out.nu = std::max(out.nu, out.n.at(k));
  }

  // tau: stabilized dim M(f)_k, probed from 2(d-2) up to 4d with three equal
  // consecutive values.
  std::optional<int64_t> tau;
  for (int k = std::max(0, 2 * (d - 2)); k + 2 <= 4 * d; ++k) {
    const int64_t v = out.milnor.dimension(k);
    if (v == out.milnor.dimension(k + 1) && v == out.milnor.dimension(k + 2)) {
      tau = v;
      break;
    }
  }
  if (!tau) inconsistent("dim M(f)_k did not stabilize by degree 4d");
  if (out.milnor.eventual_constant() != tau) inconsistent("probed tau disagrees with the Hilbert polynomial");
  out.tau = *tau;
  return out;
}

NFormula hilbert_series_N_formula(int d, int d1, int d2, int d3) {
  if (!(d1 <= d2 && d2 <= d3)) throw Error(ErrorKind::OutOfRange, "exponents must be sorted");
  NFormula out;
  out.sigma = 3 * (d - 1) - (d1 + d2 + d3);
  std::vector<int64_t> series{1};
  for (int a : {d1 + d2 - d + 1, d1 + d3 - d + 1, d2 + d3 - d + 1}) {
    if (a < 0) throw Error(ErrorKind::OutOfRange, "d_i + d_j - d + 1 < 0");
    if (a == 0) {
      series.clear();
      break;
    }
    // (t^a - 1)/(t - 1) = 1 + t + ... + t^(a-1)
    std::vector<int64_t> next(series.size() + a - 1, 0);
    for (std::size_t i = 0; i < series.size(); ++i)
      for (int j = 0; j < a; ++j) next[i + j] += series[i];
    series = std::move(next);
  }
  out.dims = Series{out.sigma, series}.trimmed();
  return out;
}

template <typename F>
int presentation_shift_check(const F& field, const SecondSyzygyData<typename F::Elem>& h, const Series& n) {
  using K = typename F::Elem;
  const Series target = n.trimmed();
  const int rows = h.rows();
  if (rows == 0) {
    if (!target.coeffs.empty()) throw Error(ErrorKind::NoAligningShift, "free curve with N(f) != 0");
    return 0;
  }
  std::vector<int> shifts;
  for (int i = 0; i < rows; ++i) shifts.push_back(h.row_degrees[0] - h.row_degrees[i]);
  GradedSubmodule<K> image{FreeModule::graded(shifts), {}};
  for (int k = 0; k < h.columns(); ++k) {
    std::vector<Polynomial<K>> column;
    for (int i = 0; i < rows; ++i) column.push_back(h.entries[i][k]);
    auto e = ModuleElement<K>::from_components(image.module, std::span<const Polynomial<K>>(column));
    if (!e.is_zero()) image.generators.push_back(std::move(e));
  }
  const auto dims = hilbert_series(field, image).finite_dimensions();
  if (!dims) throw Error(ErrorKind::NoAligningShift, "the cokernel of H does not have finite length");
  if (dims->coeffs != target.coeffs)
    throw Error(ErrorKind::NoAligningShift, "coker(H) = " + dims->to_string() + " vs N(f) = " + target.to_string());
  return target.start - dims->start;
}

#define PLANESYZ_INSTANTIATE_CURVE(F)                                                              \
  template int validate_curve<F>(const F&, const Polynomial<F::Elem>&);                            \
  template SyzygyModule<F::Elem> compute_AR<F>(const F&, const Polynomial<F::Elem>&);              \
  template SecondSyzygyData<F::Elem> second_syzygy_matrix<F>(                                      \
      const F&, const std::vector<SyzygyVector<F::Elem>>&, int);                                   \
  template std::map<std::pair<int, int>, Polynomial<F::Elem>> signed_minors<F::Elem>(             \
      const SecondSyzygyData<F::Elem>&, const F::Elem&);                                           \
  template GradedSubmodule<F::Elem> fitting_ideal_N<F>(const F&, const SecondSyzygyData<F::Elem>&); \
  template JacobianModuleData jacobian_module_data<F>(const F&, const Polynomial<F::Elem>&);       \
  template int presentation_shift_check<F>(const F&, const SecondSyzygyData<F::Elem>&, const Series&);

PLANESYZ_INSTANTIATE_CURVE(PrimeField)
PLANESYZ_INSTANTIATE_CURVE(RationalField)

}  // namespace planesyz

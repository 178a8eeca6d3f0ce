#pragma once

#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "planesyz/field.hpp"
#include "planesyz/hilbert.hpp"
#include "planesyz/module.hpp"

namespace planesyz {

namespace detail {
template <typename F>
class Reducer;
}

/// Reduced Groebner basis of a graded submodule. Elements are monic, have
/// irreducible tails, and are sorted by increasing leading term, so the
/// basis is canonical for the module order.
template <typename F>
class GroebnerBasis {
public:
  using K = typename F::Elem;
  using Element = ModuleElement<K>;

  GroebnerBasis(const F& field, FreeModule module, std::vector<Element> reduced);

  const F& field() const { return field_; }
  const FreeModule& module() const { return module_; }
  const std::vector<Element>& elements() const { return elements_; }

  /// Fully reduced remainder; zero iff v lies in the submodule.
  Element normal_form(const Element& v) const;
  bool contains(const Element& v) const { return normal_form(v).is_zero(); }

  /// Hilbert series of the quotient (ambient module)/(submodule), read off
  /// the leading monomials.
  HilbertData hilbert_series() const;

  /// Every S-pair reduces to zero. Exhaustive; intended for tests.
  bool satisfies_buchberger_criterion() const;

private:
  F field_;
  FreeModule module_;
  std::vector<Element> elements_;
  std::shared_ptr<const detail::Reducer<F>> reducer_;
};

/// Buchberger's algorithm for homogeneous submodules with the normal
/// selection strategy (lowest degree first) and the Gebauer-Moeller
/// criteria. Runs incrementally: generators may be added between calls to
/// run(), and run(d) completes the basis only up to degree d.
template <typename F>
class BuchbergerEngine {
public:
  using K = typename F::Elem;
  using Element = ModuleElement<K>;

  BuchbergerEngine(const F& field, FreeModule module);
  ~BuchbergerEngine();
  BuchbergerEngine(BuchbergerEngine&&) noexcept;
  BuchbergerEngine& operator=(BuchbergerEngine&&) noexcept;

  void add_generator(const Element& g);
  /// Elements known to form a Groebner basis of the module they generate;
  /// no S-pairs are formed among them.
  void add_groebner_basis(std::span<const Element> gb);

  void run(int max_degree = std::numeric_limits<int>::max());
  /// Normal form against the current, possibly partial, basis.
  Element reduce(const Element& v) const;
  GroebnerBasis<F> finish();

  std::size_t pairs_reduced() const;

private:
  struct State;
  std::unique_ptr<State> state_;
};

template <typename F>
using Submodule = GradedSubmodule<typename F::Elem>;

template <typename F>
GroebnerBasis<F> groebner_basis(const F& field, const Submodule<F>& m);

template <typename F>
ModuleElement<typename F::Elem> normal_form(const ModuleElement<typename F::Elem>& v,
                                            const GroebnerBasis<F>& gb) {
  return gb.normal_form(v);
}

/// Generators of {c : sum c_i gens_i = 0} in the free module whose i-th
/// basis vector has the degree of gens_i. Possibly not minimal.
template <typename F>
Submodule<F> syzygy_basis(const F& field, const FreeModule& module,
                          std::span<const ModuleElement<typename F::Elem>> gens);

/// Minimal homogeneous generating subset, sorted by (degree, leading term,
/// full term list). Each kept generator is made monic.
template <typename F>
Submodule<F> minimalize_generators(const F& field, const Submodule<F>& m);

/// I : J for ideals. Returned as a reduced Groebner basis.
template <typename F>
Submodule<F> ideal_quotient(const F& field, const Submodule<F>& i, const Submodule<F>& j);

/// I : m^infinity for m = (x, y, z), by iterating I : m until it stabilizes.
template <typename F>
Submodule<F> saturation(const F& field, const Submodule<F>& i, int* iterations = nullptr);

template <typename F>
HilbertData hilbert_series(const F& field, const Submodule<F>& m);

/// Krull dimension of S/I: -1 for I = S, 0 for m-primary ideals.
template <typename F>
int krull_dimension_of_quotient(const F& field, const Submodule<F>& i);

/// Equality of submodules of the same free module by mutual membership.
template <typename F>
bool ideal_equal(const F& field, const Submodule<F>& a, const Submodule<F>& b);

/// m^k as an ideal, generated by all monomials of degree k.
template <typename F>
Submodule<F> power_of_maximal_ideal(const F& field, int k);

#define PLANESYZ_EXTERN_GROEBNER(F)                                                              \
  extern template class GroebnerBasis<F>;                                                        \
  extern template class BuchbergerEngine<F>;                                                     \
  extern template GroebnerBasis<F> groebner_basis<F>(const F&, const Submodule<F>&);             \
  extern template Submodule<F> syzygy_basis<F>(const F&, const FreeModule&,                      \
                                               std::span<const ModuleElement<F::Elem>>);         \
  extern template Submodule<F> minimalize_generators<F>(const F&, const Submodule<F>&);          \
  extern template Submodule<F> ideal_quotient<F>(const F&, const Submodule<F>&,                  \
                                                 const Submodule<F>&);                           \
  extern template Submodule<F> saturation<F>(const F&, const Submodule<F>&, int*);               \
  extern template HilbertData hilbert_series<F>(const F&, const Submodule<F>&);                  \
  extern template int krull_dimension_of_quotient<F>(const F&, const Submodule<F>&);             \
  extern template bool ideal_equal<F>(const F&, const Submodule<F>&, const Submodule<F>&);       \
  extern template Submodule<F> power_of_maximal_ideal<F>(const F&, int);

PLANESYZ_EXTERN_GROEBNER(PrimeField)
PLANESYZ_EXTERN_GROEBNER(RationalField)
#undef PLANESYZ_EXTERN_GROEBNER

}  // namespace planesyz

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "planesyz/polynomial.hpp"

namespace planesyz {

/// Graded free module S(-s_1) + ... + S(-s_r): basis vector e_i has degree
/// shifts[i]. Terms m*e_i are ordered by total degree deg(m) + s_i, then by
/// block (higher block dominates), then degrevlex on m, then by smaller i.
/// Equal blocks give a term-over-position order; distinct blocks give the
/// elimination order used to read off syzygies.
struct FreeModule {
  std::vector<int> shifts;
  std::vector<int> blocks;

  static FreeModule ring() { return {{0}, {0}}; }
  static FreeModule graded(std::vector<int> shifts) {
    std::vector<int> blocks(shifts.size(), 0);
    return {std::move(shifts), std::move(blocks)};
  }

  int rank() const { return int(shifts.size()); }

  int degree_of(Monomial m, uint32_t comp) const { return m.degree() + shifts[comp]; }

  /// Larger tuple means larger term.
  auto order_key(Monomial m, uint32_t comp) const {
    return std::make_tuple(degree_of(m, comp), blocks[comp], m.order_key(), -int64_t(comp));
  }
  bool greater(Monomial a, uint32_t ca, Monomial b, uint32_t cb) const {
    return order_key(a, ca) > order_key(b, cb);
  }

  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

template <typename K>
struct ModuleTerm {
  Monomial mono;
  uint32_t comp;
  K coeff;
  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

/// Element of a FreeModule, terms strictly decreasing in that module's order.
/// The element does not remember its module; callers pass the module to any
/// operation that depends on the order.
template <typename K>
class ModuleElement {
public:
  using Term = ModuleTerm<K>;

  ModuleElement() = default;

  static ModuleElement from_sorted(std::vector<Term> terms) {
    ModuleElement e;
    e.terms_ = std::move(terms);
    return e;
  }

  static ModuleElement from_components(const FreeModule& module,
                                       std::span<const Polynomial<K>> components) {
    if (int(components.size()) != module.rank())
      throw Error(ErrorKind::RankMismatch, "component count differs from module rank");
    std::vector<Term> terms;
    for (uint32_t i = 0; i < components.size(); ++i)
      for (const auto& t : components[i].terms()) terms.push_back({t.mono, i, t.coeff});
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return module.greater(a.mono, a.comp, b.mono, b.comp);
    });
    return from_sorted(std::move(terms));
  }

  static ModuleElement from_polynomial(const Polynomial<K>& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) terms.push_back({t.mono, 0, t.coeff});
    return from_sorted(std::move(terms));
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }

  /// Degree of the leading term; all terms share it for homogeneous elements.
  int degree(const FreeModule& module) const {
    return terms_.empty() ? 0 : module.degree_of(terms_.front().mono, terms_.front().comp);
  }
  bool is_homogeneous(const FreeModule& module) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
      return module.degree_of(t.mono, t.comp) == degree(module);
    });
  }

  Polynomial<K> component(uint32_t i) const {
    std::vector<typename Polynomial<K>::Term> out;
    for (const auto& t : terms_)
      if (t.comp == i) out.push_back({t.mono, t.coeff});
    return Polynomial<K>::from_terms(std::move(out));
  }
  std::vector<Polynomial<K>> components(int rank) const {
    std::vector<Polynomial<K>> out;
    for (int i = 0; i < rank; ++i) out.push_back(component(uint32_t(i)));
    return out;
  }

  ModuleElement scaled(const K& c) const {
    ModuleElement r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  ModuleElement monic() const {
    return terms_.empty() ? *this : scaled(inverse(terms_.front().coeff));
  }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
  std::vector<Term> terms_;
};

/// A submodule of a graded free module given by homogeneous generators.
/// Ideals are the rank-one case with shift 0.
template <typename K>
struct GradedSubmodule {
  FreeModule module;
  std::vector<ModuleElement<K>> generators;

  static GradedSubmodule ideal(std::span<const Polynomial<K>> gens) {
    GradedSubmodule m{FreeModule::ring(), {}};
    for (const auto& g : gens)
      if (!g.is_zero()) m.generators.push_back(ModuleElement<K>::from_polynomial(g));
    return m;
  }
  static GradedSubmodule ideal(std::initializer_list<Polynomial<K>> gens) {
    std::vector<Polynomial<K>> v(gens);
    return ideal(std::span<const Polynomial<K>>(v));
  }

  /// Generators of an ideal as polynomials.
  std::vector<Polynomial<K>> polynomials() const {
    std::vector<Polynomial<K>> out;
    for (const auto& g : generators) out.push_back(g.component(0));
    return out;
  }
};

}  // namespace planesyz

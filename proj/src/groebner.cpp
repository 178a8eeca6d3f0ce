#include "planesyz/groebner.hpp"

#include <map>
#include <mutex>

namespace planesyz {
namespace detail {

/// Dense coordinates for all terms of one total degree. Terms are laid out
/// in decreasing module order, so index 0 is the largest term and scanning
/// upward visits terms in reduction order.
struct Slice {
  int degree = 0;
  std::vector<std::pair<uint32_t, Monomial>> decode;
  std::vector<int64_t> base;  // -1 when the component has no terms here
  std::vector<uint32_t> stride;

  std::size_t size() const { return decode.size(); }
  std::size_t index(uint32_t comp, Monomial m) const {
    return std::size_t(base[comp]) + m.rank_in_degree() * stride[comp];
  }
};

Slice build_slice(const FreeModule& module, int degree) {
  Slice s;
  s.degree = degree;
  s.base.assign(module.rank(), -1);
  s.stride.assign(module.rank(), 0);

  std::vector<uint32_t> comps;
  for (uint32_t c = 0; c < uint32_t(module.rank()); ++c)
    if (degree - module.shifts[c] >= 0) comps.push_back(c);
  // Within one total degree: higher block first, then larger monomial degree
  // (degrevlex compares degree first), then smaller component index.
  std::sort(comps.begin(), comps.end(), [&](uint32_t a, uint32_t b) {
    auto ka = std::make_tuple(-module.blocks[a], module.shifts[a], a);
    auto kb = std::make_tuple(-module.blocks[b], module.shifts[b], b);
    return ka < kb;
  });

  std::size_t offset = 0;
  for (std::size_t g = 0; g < comps.size();) {
    std::size_t h = g;
    while (h < comps.size() && module.blocks[comps[h]] == module.blocks[comps[g]] &&
           module.shifts[comps[h]] == module.shifts[comps[g]])
      ++h;
    const uint32_t group = uint32_t(h - g);
    const int k = degree - module.shifts[comps[g]];
    const std::size_t count = Monomial::count_in_degree(k);
    for (std::size_t q = g; q < h; ++q) {
      s.base[comps[q]] = int64_t(offset + (q - g));
      s.stride[comps[q]] = group;
    }
    s.decode.resize(offset + count * group);
    for (std::size_t r = 0; r < count; ++r) {
      Monomial m = Monomial::unrank(k, r);
      for (std::size_t q = g; q < h; ++q) s.decode[offset + r * group + (q - g)] = {comps[q], m};
    }
    offset += count * group;
    g = h;
  }
  return s;
}

template <typename F>
class Reducer {
public:
  using K = typename F::Elem;
  using Element = ModuleElement<K>;

  Reducer(const F& field, FreeModule module)
      : field_(field), module_(std::move(module)), by_comp_(module_.rank()) {}

  const FreeModule& module() const { return module_; }
  std::size_t size() const { return basis_.size(); }
  const Element& at(std::size_t i) const { return basis_[i]; }
  const std::vector<uint32_t>& in_component(uint32_t c) const { return by_comp_[c]; }

  /// `monic` must have leading coefficient one.
  std::size_t insert(Element monic) {
    by_comp_[monic.leading_term().comp].push_back(uint32_t(basis_.size()));
    basis_.push_back(std::move(monic));
    return basis_.size() - 1;
  }

  Element reduce(const Element& v) const {
    if (v.is_zero()) return v;
    const Slice& s = slice(v.degree(module_));
    std::vector<K> dense(s.size(), field_.zero());
    scatter(dense, s, v, Monomial(), field_.one());
    reduce_dense(dense, s, 0);
    return gather(dense, s);
  }

  /// Reduces everything below the leading term.
  Element reduce_tail(const Element& v) const {
    if (v.is_zero()) return v;
    const Slice& s = slice(v.degree(module_));
    std::vector<K> dense(s.size(), field_.zero());
    scatter(dense, s, v, Monomial(), field_.one());
    const auto& lt = v.leading_term();
    reduce_dense(dense, s, s.index(lt.comp, lt.mono) + 1);
    return gather(dense, s);
  }

  Element s_polynomial_remainder(std::size_t i, std::size_t j, Monomial lcm) const {
    const Element& a = basis_[i];
    const Element& b = basis_[j];
    const uint32_t comp = a.leading_term().comp;
    const Slice& s = slice(module_.degree_of(lcm, comp));
    std::vector<K> dense(s.size(), field_.zero());
    scatter(dense, s, a, a.leading_term().mono.quotient_of(lcm), field_.one());
    scatter(dense, s, b, b.leading_term().mono.quotient_of(lcm), -field_.one());
    reduce_dense(dense, s, 0);
    return gather(dense, s);
  }

  /// Nonnegative degrees only; a slice is built once per degree and shared.
  const Slice& slice(int degree) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = slices_.find(degree);
    if (it == slices_.end())
      it = slices_.emplace(degree, std::make_unique<Slice>(build_slice(module_, degree))).first;
    return *it->second;
  }

private:
  void scatter(std::vector<K>& dense, const Slice& s, const Element& e, Monomial mult,
               const K& c) const {
    for (const auto& t : e.terms()) dense[s.index(t.comp, t.mono * mult)] += c * t.coeff;
  }

  Element gather(const std::vector<K>& dense, const Slice& s) const {
    std::vector<typename Element::Term> terms;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (!planesyz::is_zero(dense[i])) terms.push_back({s.decode[i].second, s.decode[i].first, dense[i]});
    return Element::from_sorted(std::move(terms));
  }

  int find_reducer(uint32_t comp, Monomial m) const {
    for (uint32_t idx : by_comp_[comp])
      if (basis_[idx].leading_term().mono.divides(m)) return int(idx);
    return -1;
  }

  void reduce_dense(std::vector<K>& dense, const Slice& s, std::size_t from) const {
    for (std::size_t i = from; i < dense.size(); ++i) {
      if (planesyz::is_zero(dense[i])) continue;
      const auto [comp, mono] = s.decode[i];
      int r = find_reducer(comp, mono);
      if (r < 0) continue;
      const Element& g = basis_[r];
      const Monomial mult = g.leading_term().mono.quotient_of(mono);
      const K c = dense[i];
      for (const auto& t : g.terms()) dense[s.index(t.comp, t.mono * mult)] -= c * t.coeff;
    }
  }

  F field_;
  FreeModule module_;
  std::vector<Element> basis_;
  std::vector<std::vector<uint32_t>> by_comp_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<Slice>> slices_;
};

}  // namespace detail

namespace {

template <typename K>
void require_homogeneous(const FreeModule& module, const ModuleElement<K>& e) {
  for (const auto& t : e.terms())
    if (t.comp >= uint32_t(module.rank()))
      throw Error(ErrorKind::RankMismatch, "term component outside the ambient module");
  if (!e.is_homogeneous(module))
    throw Error(ErrorKind::NotHomogeneous, "module element is not homogeneous for the shifts");
}

template <typename K>
bool term_list_less(const FreeModule& module, const ModuleElement<K>& a, const ModuleElement<K>& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    auto kx = module.order_key(x[i].mono, x[i].comp);
    auto ky = module.order_key(y[i].mono, y[i].comp);
    if (kx != ky) return kx < ky;
    std::string cx = coefficient_text(x[i].coeff), cy = coefficient_text(y[i].coeff);
    if (cx != cy) return cx < cy;
  }
  return x.size() < y.size();
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

template <typename F>
GroebnerBasis<F>::GroebnerBasis(const F& field, FreeModule module, std::vector<Element> reduced)
    : field_(field), module_(std::move(module)), elements_(std::move(reduced)) {
  auto r = std::make_shared<detail::Reducer<F>>(field_, module_);
  for (const auto& e : elements_) r->insert(e);
  reducer_ = std::move(r);
}

template <typename F>
auto GroebnerBasis<F>::normal_form(const Element& v) const -> Element {
  for (const auto& t : v.terms())
    if (t.comp >= uint32_t(module_.rank()))
      throw Error(ErrorKind::RankMismatch, "element does not live in the basis' module");
  if (v.is_homogeneous(module_)) return reducer_->reduce(v);
  // Normal forms are linear: reduce each homogeneous part separately.
  std::map<int, std::vector<typename Element::Term>> parts;
  for (const auto& t : v.terms()) parts[module_.degree_of(t.mono, t.comp)].push_back(t);
  std::vector<typename Element::Term> out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    Element r = reducer_->reduce(Element::from_sorted(it->second));
    out.insert(out.end(), r.terms().begin(), r.terms().end());
  }
  return Element::from_sorted(std::move(out));
}

template <typename F>
HilbertData GroebnerBasis<F>::hilbert_series() const {
  std::vector<std::vector<Monomial>> lead(module_.rank());
  for (const auto& e : elements_) lead[e.leading_term().comp].push_back(e.leading_term().mono);
  HilbertData total;
  for (int c = 0; c < module_.rank(); ++c)
    total = total + HilbertData::of_monomial_quotient(lead[c], module_.shifts[c]);
  return total;
}

template <typename F>
bool GroebnerBasis<F>::satisfies_buchberger_criterion() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      const auto& a = elements_[i].leading_term();
      const auto& b = elements_[j].leading_term();
      if (a.comp != b.comp) continue;
      if (!reducer_->s_polynomial_remainder(i, j, lcm(a.mono, b.mono)).is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// BuchbergerEngine

template <typename F>
struct BuchbergerEngine<F>::State {
  struct Pair {
    int degree;
    Monomial lcm;
    uint32_t comp;
    uint32_t i, j;
  };

  State(const F& f, FreeModule m) : field(f), module(m), reducer(f, std::move(m)) {}

  F field;
  FreeModule module;
  detail::Reducer<F> reducer;
  std::vector<bool> redundant;
  std::vector<Pair> pairs;
  std::vector<Element> pending;  // input generators not yet processed
  std::size_t reduced_count = 0;

  Monomial lead(std::size_t i) const { return reducer.at(i).leading_term().mono; }

  void insert(const Element& reduced, bool form_pairs) {
    Element h = reduced.monic();
    const uint32_t c = h.leading_term().comp;
    const Monomial th = h.leading_term().mono;
    const std::size_t idx = reducer.insert(std::move(h));
    redundant.push_back(false);
    if (!form_pairs) return;

    // Chain criterion on queued pairs.
    std::erase_if(pairs, [&](const Pair& p) {
      return p.comp == c && th.divides(p.lcm) && lcm(lead(p.i), th) != p.lcm &&
             lcm(lead(p.j), th) != p.lcm;
    });

    std::vector<Pair> fresh;
    for (uint32_t i : reducer.in_component(c)) {
      if (i == idx || redundant[i]) continue;
      Monomial l = lcm(lead(i), th);
      fresh.push_back({module.degree_of(l, c), l, c, i, uint32_t(idx)});
    }
    // Drop pairs whose lcm is a proper multiple of another new pair's lcm.
    std::vector<Pair> kept;
    for (const auto& p : fresh) {
      bool dominated = std::any_of(fresh.begin(), fresh.end(), [&](const Pair& q) {
        return q.lcm != p.lcm && q.lcm.divides(p.lcm);
      });
      if (!dominated) kept.push_back(p);
    }
    // One pair per lcm; for ideals a coprime pair discards its whole group.
    const bool ideal = module.rank() == 1;
    std::vector<Pair> chosen;
    for (std::size_t a = 0; a < kept.size(); ++a) {
      bool seen = false, any_coprime = false;
      for (std::size_t b = 0; b < kept.size(); ++b) {
        if (kept[b].lcm != kept[a].lcm) continue;
        if (b < a) seen = true;
        if (coprime(lead(kept[b].i), th)) any_coprime = true;
      }
      if (seen || (ideal && any_coprime)) continue;
      chosen.push_back(kept[a]);
    }
    pairs.insert(pairs.end(), chosen.begin(), chosen.end());

    for (uint32_t i : reducer.in_component(c))
      if (i != idx && th.divides(lead(i))) redundant[i] = true;
  }

  int next_degree() const {
    int d = std::numeric_limits<int>::max();
    for (const auto& g : pending) d = std::min(d, g.degree(module));
    for (const auto& p : pairs) d = std::min(d, p.degree);
    return d;
  }

  void run(int max_degree) {
    for (;;) {
      const int d = next_degree();
      if (d == std::numeric_limits<int>::max() || d > max_degree) return;
      // Inputs of this degree first, in the order given.
      std::vector<Element> now;
      std::erase_if(pending, [&](const Element& g) {
        if (g.degree(module) != d) return false;
        now.push_back(g);
        return true;
      });
      for (const auto& g : now) {
        Element r = reducer.reduce(g);
        if (!r.is_zero()) insert(r, true);
      }
      // New pairs always have larger degree, so this drains degree d.
      for (;;) {
        auto best = pairs.end();
        for (auto it = pairs.begin(); it != pairs.end(); ++it) {
          if (it->degree != d) continue;
          if (best == pairs.end() || it->lcm < best->lcm ||
              (it->lcm == best->lcm && std::tie(it->comp, it->i, it->j) < std::tie(best->comp, best->i, best->j)))
            best = it;
        }
        if (best == pairs.end()) break;
        Pair p = *best;
        pairs.erase(best);
        ++reduced_count;
        Element r = reducer.s_polynomial_remainder(p.i, p.j, p.lcm);
        if (!r.is_zero()) insert(r, true);
      }
    }
  }
};

template <typename F>
BuchbergerEngine<F>::BuchbergerEngine(const F& field, FreeModule module)
    : state_(std::make_unique<State>(field, std::move(module))) {}

template <typename F>
BuchbergerEngine<F>::~BuchbergerEngine() = default;
template <typename F>
BuchbergerEngine<F>::BuchbergerEngine(BuchbergerEngine&&) noexcept = default;
template <typename F>
BuchbergerEngine<F>& BuchbergerEngine<F>::operator=(BuchbergerEngine&&) noexcept = default;

template <typename F>
void BuchbergerEngine<F>::add_generator(const Element& g) {
  require_homogeneous(state_->module, g);
  if (!g.is_zero()) state_->pending.push_back(g);
}

template <typename F>
void BuchbergerEngine<F>::add_groebner_basis(std::span<const Element> gb) {
  for (const auto& g : gb) {
    require_homogeneous(state_->module, g);
    if (!g.is_zero()) state_->insert(g, false);
  }
}

template <typename F>
void BuchbergerEngine<F>::run(int max_degree) {
  state_->run(max_degree);
}

template <typename F>
auto BuchbergerEngine<F>::reduce(const Element& v) const -> Element {
  require_homogeneous(state_->module, v);
  return state_->reducer.reduce(v);
}

template <typename F>
std::size_t BuchbergerEngine<F>::pairs_reduced() const {
  return state_->reduced_count;
}

template <typename F>
GroebnerBasis<F> BuchbergerEngine<F>::finish() {
  run();
  const auto& red = state_->reducer;
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < red.size(); ++i) {
    const auto& ti = red.at(i).leading_term();
    bool divisible = false;
    for (std::size_t j = 0; j < red.size() && !divisible; ++j) {
      if (j == i) continue;
      const auto& tj = red.at(j).leading_term();
      if (tj.comp != ti.comp || !tj.mono.divides(ti.mono)) continue;
      // Equal leading terms cannot occur; keep the earlier one defensively.
      divisible = tj.mono != ti.mono || j < i;
    }
    if (!divisible) minimal.push_back(i);
  }
  detail::Reducer<F> lean(state_->field, state_->module);
  for (std::size_t i : minimal) lean.insert(red.at(i));
  std::vector<Element> out;
  for (std::size_t i : minimal) out.push_back(lean.reduce_tail(red.at(i)));
  const FreeModule& m = state_->module;
  std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
    const auto& x = a.leading_term();
    const auto& y = b.leading_term();
    return m.greater(y.mono, y.comp, x.mono, x.comp);
  });
  return GroebnerBasis<F>(state_->field, m, std::move(out));
}

// ---------------------------------------------------------------------------
// Free functions

template <typename F>
GroebnerBasis<F> groebner_basis(const F& field, const Submodule<F>& m) {
  BuchbergerEngine<F> engine(field, m.module);
  for (const auto& g : m.generators) engine.add_generator(g);
  return engine.finish();
}

template <typename F>
Submodule<F> syzygy_basis(const F& field, const FreeModule& module,
                          std::span<const ModuleElement<typename F::Elem>> gens) {
  using K = typename F::Elem;
  const int r = module.rank();
  const int k = int(gens.size());
  FreeModule aug{module.shifts, std::vector<int>(r, 1)};
  std::vector<int> syz_shifts;
  for (const auto& g : gens) {
    require_homogeneous(module, g);
    syz_shifts.push_back(g.degree(module));
  }
  for (int i = 0; i < k; ++i) {
    aug.shifts.push_back(syz_shifts[i]);
    aug.blocks.push_back(0);
  }

  BuchbergerEngine<F> engine(field, aug);
  for (int i = 0; i < k; ++i) {
    auto terms = gens[i].terms();
    terms.push_back({Monomial(), uint32_t(r + i), field.one()});
    engine.add_generator(ModuleElement<K>::from_sorted(std::move(terms)));
  }
  GroebnerBasis<F> gb = engine.finish();

  Submodule<F> syz{FreeModule::graded(syz_shifts), {}};
  for (const auto& e : gb.elements()) {
    if (e.leading_term().comp < uint32_t(r)) continue;
    std::vector<ModuleTerm<K>> terms;
    for (const auto& t : e.terms()) terms.push_back({t.mono, t.comp - uint32_t(r), t.coeff});
    syz.generators.push_back(ModuleElement<K>::from_sorted(std::move(terms)));
  }
  return syz;
}

template <typename F>
Submodule<F> minimalize_generators(const F& field, const Submodule<F>& m) {
  using K = typename F::Elem;
  const FreeModule& mod = m.module;
  std::vector<ModuleElement<K>> gens;
  for (const auto& g : m.generators) {
    require_homogeneous(mod, g);
    if (!g.is_zero()) gens.push_back(g.monic());
  }
  std::sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
    return term_list_less(mod, a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  BuchbergerEngine<F> engine(field, mod);
  Submodule<F> out{mod, {}};
  for (const auto& g : gens) {
    engine.run(g.degree(mod));
    if (engine.reduce(g).is_zero()) continue;
    out.generators.push_back(g);
    engine.add_generator(g);
  }
  return out;
}

template <typename F>
Submodule<F> ideal_quotient(const F& field, const Submodule<F>& i, const Submodule<F>& j) {
  using K = typename F::Elem;
  const auto divisors = j.polynomials();
  std::vector<Polynomial<K>> js;
  for (const auto& p : divisors)
    if (!p.is_zero()) js.push_back(p);
  if (js.empty()) return Submodule<F>::ideal({Polynomial<K>::constant(field.one())});

  GroebnerBasis<F> gi = groebner_basis(field, i);
  const int s = int(js.size());
  int top = 0;
  for (const auto& p : js) top = std::max(top, p.degree());

  // Kernel of S -> (S/I)^s, c |-> (c j_1, ..., c j_s): eliminate the first
  // s components of the module generated by (j_1,...,j_s, 1) and I^s.
  FreeModule aug;
  for (const auto& p : js) {
    aug.shifts.push_back(top - p.degree());
    aug.blocks.push_back(1);
  }
  aug.shifts.push_back(top);
  aug.blocks.push_back(0);

  std::vector<ModuleElement<K>> ideal_part;
  for (int c = 0; c < s; ++c)
    for (const auto& g : gi.elements()) {
      std::vector<ModuleTerm<K>> terms;
      for (const auto& t : g.terms()) terms.push_back({t.mono, uint32_t(c), t.coeff});
      ideal_part.push_back(ModuleElement<K>::from_sorted(std::move(terms)));
    }

  std::vector<Polynomial<K>> comps(js);
  comps.push_back(Polynomial<K>::constant(field.one()));
  BuchbergerEngine<F> engine(field, aug);
  engine.add_groebner_basis(ideal_part);
  engine.add_generator(ModuleElement<K>::from_components(aug, comps));
  GroebnerBasis<F> gb = engine.finish();

  std::vector<Polynomial<K>> quotient;
  for (const auto& e : gb.elements())
    if (e.leading_term().comp == uint32_t(s)) quotient.push_back(e.component(uint32_t(s)));
  GroebnerBasis<F> reduced = groebner_basis(field, Submodule<F>::ideal(std::span<const Polynomial<K>>(quotient)));
  return Submodule<F>{FreeModule::ring(), reduced.elements()};
}

template <typename F>
Submodule<F> saturation(const F& field, const Submodule<F>& i, int* iterations) {
  using K = typename F::Elem;
  const K one = field.one();
  const Submodule<F> maximal = Submodule<F>::ideal(
      {Polynomial<K>::variable(0, one), Polynomial<K>::variable(1, one), Polynomial<K>::variable(2, one)});
  Submodule<F> current{FreeModule::ring(), groebner_basis(field, i).elements()};
  int steps = 0;
  for (;;) {
    Submodule<F> next = ideal_quotient(field, current, maximal);
    ++steps;
    // current is contained in next, so one inclusion decides equality.
    GroebnerBasis<F> gc = groebner_basis(field, current);
    bool stable = std::all_of(next.generators.begin(), next.generators.end(),
                              [&](const auto& g) { return gc.contains(g); });
    if (stable) break;
    current = std::move(next);
  }
  if (iterations) *iterations = steps;
  return current;
}

template <typename F>
HilbertData hilbert_series(const F& field, const Submodule<F>& m) {
  return groebner_basis(field, m).hilbert_series();
}

template <typename F>
int krull_dimension_of_quotient(const F& field, const Submodule<F>& i) {
  return hilbert_series(field, i).krull_dimension();
}

template <typename F>
bool ideal_equal(const F& field, const Submodule<F>& a, const Submodule<F>& b) {
  if (a.module.shifts != b.module.shifts)
    throw Error(ErrorKind::RankMismatch, "comparing submodules of different free modules");
  GroebnerBasis<F> ga = groebner_basis(field, a);
  GroebnerBasis<F> gb = groebner_basis(field, b);
  auto inside = [](const GroebnerBasis<F>& g, const Submodule<F>& m) {
    return std::all_of(m.generators.begin(), m.generators.end(),
                       [&](const auto& e) { return g.contains(e); });
  };
  return inside(ga, b) && inside(gb, a);
}

template <typename F>
Submodule<F> power_of_maximal_ideal(const F& field, int k) {
  using K = typename F::Elem;
  std::vector<Polynomial<K>> gens;
  for (std::size_t r = 0; r < Monomial::count_in_degree(k); ++r)
    gens.push_back(Polynomial<K>::monomial(Monomial::unrank(k, r), field.one()));
  return Submodule<F>::ideal(std::span<const Polynomial<K>>(gens));
}

#define PLANESYZ_INSTANTIATE_GROEBNER(F)                                                         \
  template class GroebnerBasis<F>;                                                               \
  template class BuchbergerEngine<F>;                                                            \
  template GroebnerBasis<F> groebner_basis<F>(const F&, const Submodule<F>&);                    \
  template Submodule<F> syzygy_basis<F>(const F&, const FreeModule&,                             \
                                        std::span<const ModuleElement<F::Elem>>);                \
  template Submodule<F> minimalize_generators<F>(const F&, const Submodule<F>&);                 \
  template Submodule<F> ideal_quotient<F>(const F&, const Submodule<F>&, const Submodule<F>&);   \
  template Submodule<F> saturation<F>(const F&, const Submodule<F>&, int*);                      \
  template HilbertData hilbert_series<F>(const F&, const Submodule<F>&);                         \
  template int krull_dimension_of_quotient<F>(const F&, const Submodule<F>&);                    \
  template bool ideal_equal<F>(const F&, const Submodule<F>&, const Submodule<F>&);              \
  template Submodule<F> power_of_maximal_ideal<F>(const F&, int);

PLANESYZ_INSTANTIATE_GROEBNER(PrimeField)
PLANESYZ_INSTANTIATE_GROEBNER(RationalField)

}  // namespace planesyz

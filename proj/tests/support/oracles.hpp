#pragma once

// Dense degree-by-degree linear algebra over F_p, independent of the
// Groebner engine: its own monomial indexing and its own elimination.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "planesyz/polynomial.hpp"

namespace oracle {

using Exp = std::array<int, 3>;

/// Sparse polynomial as exponent -> coefficient mod p.
struct Poly {
  std::map<Exp, uint64_t> terms;
};

inline Poly from_library(const planesyz::Polynomial<planesyz::Fp>& f) {
  Poly out;
  for (const auto& t : f.terms()) out.terms[{int(t.mono.x()), int(t.mono.y()), int(t.mono.z())}] = t.coeff.value();
  return out;
}

inline std::vector<Exp> monomials(int k) {
  std::vector<Exp> out;
  if (k < 0) return out;
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
  return out;
}

inline std::map<Exp, int> index_of(int k) {
  std::map<Exp, int> out;
  const auto ms = monomials(k);
  for (int i = 0; i < int(ms.size()); ++i) out[ms[i]] = i;
  return out;
}

inline uint64_t power_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

/// Row echelon basis of a subspace of F_p^n, kept fully reduced so that
/// reduce() is a linear projection.
class Echelon {
public:
  Echelon(std::size_t n, uint64_t p) : n_(n), p_(p) {}

  std::vector<uint64_t> reduce(std::vector<uint64_t> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const uint64_t c = v[pivots_[r]];
      if (!c) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = (v[j] + (p_ - c) * rows_[r][j]) % p_;
    }
    return v;
  }

  bool insert(std::vector<uint64_t> v) {
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < n_ && !v[piv]) ++piv;
    if (piv == n_) return false;
    const uint64_t inv = power_mod(v[piv], p_ - 2, p_);
    for (auto& x : v) x = x * inv % p_;
    for (auto& row : rows_) {
      const uint64_t c = row[piv];
      if (!c) continue;
      for (std::size_t j = 0; j < n_; ++j) row[j] = (row[j] + (p_ - c) * v[j]) % p_;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

private:
  std::size_t n_;
  uint64_t p_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// A vector of r polynomials (an element of S^r), with its graded degree.
struct Vec {
  std::vector<Poly> comps;
  int degree = 0;
};

/// Coordinates of mono * v in (S^r)_k, where component i carries shifts[i].
inline std::vector<uint64_t> coords(const Vec& v, const Exp& mono, const std::vector<int>& shifts, int k,
                                    const std::vector<std::map<Exp, int>>& idx, const std::vector<std::size_t>& offset,
                                    std::size_t total) {
  std::vector<uint64_t> out(total, 0);
  for (std::size_t i = 0; i < v.comps.size(); ++i)
    for (const auto& [e, c] : v.comps[i].terms) {
      const Exp m{e[0] + mono[0], e[1] + mono[1], e[2] + mono[2]};
      if (m[0] + m[1] + m[2] + shifts[i] != k) continue;
      out[offset[i] + idx[i].at(m)] = c;
    }
  return out;
}

struct Layout {
  std::vector<std::map<Exp, int>> idx;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
};

inline Layout layout(const std::vector<int>& shifts, int k) {
  Layout l;
  for (int s : shifts) {
    l.offset.push_back(l.total);
    l.idx.push_back(index_of(k - s));
    l.total += monomials(k - s).size();
  }
  return l;
}

/// dim of the degree-k piece of the submodule of S^r (shifts) spanned by gens.
inline std::size_t span_dimension(const std::vector<Vec>& gens, const std::vector<int>& shifts, int k, uint64_t p) {
  const Layout l = layout(shifts, k);
  Echelon ech(l.total, p);
  for (const auto& g : gens)
    for (const auto& mono : monomials(k - g.degree)) ech.insert(coords(g, mono, shifts, k, l.idx, l.offset, l.total));
  return ech.rank();
}

/// dim of the degree-k piece of {c : sum c_i gens_i = 0}, where gens live in
/// S^r with `shifts` and c_i has degree k - deg gens_i.
inline std::size_t kernel_dimension(const std::vector<Vec>& gens, const std::vector<int>& shifts, int k, uint64_t p) {
  const Layout l = layout(shifts, k);
  // Columns: one unknown per (generator, monomial). Kernel = unknowns - rank.
  std::size_t unknowns = 0;
  Echelon ech(l.total, p);
  for (const auto& g : gens)
    for (const auto& mono : monomials(k - g.degree)) {
      ++unknowns;
      ech.insert(coords(g, mono, shifts, k, l.idx, l.offset, l.total));
    }
  return unknowns - ech.rank();
}

/// dim (I : m^infinity)_k for an ideal I with (I : m^infinity)_j = I_j for
/// all j > top. Uses g in I^sat iff g * S_N in I_{k+N} with k + N > top.
inline std::size_t saturation_dimension(const std::vector<Poly>& ideal_gens, int gen_degree, int k, int top,
                                        uint64_t p) {
  const int N = std::max(1, top + 1 - k);
  const int K = k + N;
  const auto idx = index_of(K);
  const std::size_t n = idx.size();
  Echelon ideal(n, p);
  for (const auto& g : ideal_gens)
    for (const auto& mono : monomials(K - gen_degree)) {
      std::vector<uint64_t> v(n, 0);
      for (const auto& [e, c] : g.terms) v[idx.at({e[0] + mono[0], e[1] + mono[1], e[2] + mono[2]})] = c;
      ideal.insert(std::move(v));
    }
  // Matrix of S_k -> sum over mu in S_N of S_K / I_K; its kernel is the answer.
  const auto basis = monomials(k);
  const auto multipliers = monomials(N);
  Echelon image(multipliers.size() * n, p);
  std::size_t rank = 0;
  for (const auto& b : basis) {
    std::vector<uint64_t> row;
    row.reserve(multipliers.size() * n);
    for (const auto& mu : multipliers) {
      std::vector<uint64_t> v(n, 0);
      v[idx.at({b[0] + mu[0], b[1] + mu[1], b[2] + mu[2]})] = 1;
      const auto r = ideal.reduce(std::move(v));
      row.insert(row.end(), r.begin(), r.end());
    }
    if (image.insert(std::move(row))) ++rank;
  }
  return basis.size() - rank;
}

/// dim (S/I)_k for an ideal given by homogeneous generators.
inline std::size_t quotient_dimension(const std::vector<Poly>& gens, const std::vector<int>& degrees, int k,
                                      uint64_t p) {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < gens.size(); ++i) vecs.push_back({{gens[i]}, degrees[i]});
  return monomials(k).size() - span_dimension(vecs, {0}, k, p);
}

}  // namespace oracle

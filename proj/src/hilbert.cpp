#include "planesyz/hilbert.hpp"

#include <algorithm>

namespace planesyz {
namespace {

using Coeffs = std::vector<int64_t>;

Coeffs add(const Coeffs& a, const Coeffs& b, int b_shift = 0) {
  Coeffs r(std::max(a.size(), b.size() + b_shift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + b_shift] += b[i];
  return r;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](Monomial a, Monomial b) { return a.degree() < b.degree() || (a.degree() == b.degree() && a > b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (Monomial g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](Monomial h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

int support_size(Monomial m) { return (m.x() > 0) + (m.y() > 0) + (m.z() > 0); }

// Numerator of the Hilbert series of S/I, by pivoting on a variable power:
// H(S/I) = H(S/(I + p)) + t^deg(p) H(S/(I : p)).
Coeffs monomial_numerator(std::vector<Monomial> gens) {
  gens = minimal_generators(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  auto mixed = std::find_if(gens.begin(), gens.end(), [](Monomial m) { return support_size(m) > 1; });
  if (mixed == gens.end()) {
    Coeffs r{1};
    for (Monomial g : gens) {
      Coeffs factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] = -1;
      r = mul(r, factor);
    }
    return r;
  }

  int var = 0;
  for (int i = 1; i < 3; ++i)
    if (mixed->exponent(i) > mixed->exponent(var)) var = i;
  const unsigned e = mixed->exponent(var);
  unsigned pe[3] = {0, 0, 0};
  pe[var] = e;
  const Monomial pivot(pe[0], pe[1], pe[2]);

  std::vector<Monomial> sum = gens;
  sum.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (Monomial g : gens) {
    unsigned ex[3] = {g.x(), g.y(), g.z()};
    ex[var] = ex[var] > e ? ex[var] - e : 0;
    colon.emplace_back(ex[0], ex[1], ex[2]);
  }
  return add(monomial_numerator(std::move(sum)), monomial_numerator(std::move(colon)), int(e));
}

int64_t binom2(int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Divides by (1 - t) when t = 1 is a root; returns false otherwise.
bool divide_one_minus_t(Coeffs& c) {
  int64_t total = 0;
  for (auto v : c) total += v;
  if (total != 0 || c.empty()) return false;
  // c(t) = (1 - t) q(t)  =>  q_i = sum_{j<=i} c_j.
  Coeffs q(c.size() - 1, 0);
  int64_t run = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    run += c[i];
    q[i] = run;
  }
  c = std::move(q);
  return true;
}

}  // namespace

bool Series::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int64_t v) { return v == 0; });
}

Series Series::trimmed() const {
  std::size_t lo = 0, hi = coeffs.size();
  while (lo < hi && coeffs[lo] == 0) ++lo;
  while (hi > lo && coeffs[hi - 1] == 0) --hi;
  if (lo == hi) return {};
  return {start + int(lo), Coeffs(coeffs.begin() + lo, coeffs.begin() + hi)};
}

bool Series::is_symmetric() const {
  Series t = trimmed();
  return std::equal(t.coeffs.begin(), t.coeffs.end(), t.coeffs.rbegin());
}

std::string Series::to_string() const {
  Series t = trimmed();
  if (t.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
    int64_t c = t.coeffs[i];
    if (c == 0) continue;
    int k = t.start + int(i);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    int64_t a = c < 0 ? -c : c;
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty()) out += std::to_string(a);
    else out += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  return out;
}

bool operator==(const Series& a, const Series& b) {
  Series x = a.trimmed(), y = b.trimmed();
  return x.start == y.start && x.coeffs == y.coeffs;
}

HilbertData HilbertData::of_monomial_quotient(const std::vector<Monomial>& gens, int shift) {
  return HilbertData(Series{shift, monomial_numerator(gens)});
}

HilbertData HilbertData::of_finite(const Series& dims) {
  // numerator = dims * (1 - t)^3
  return HilbertData(Series{dims.start, mul(dims.coeffs, Coeffs{1, -3, 3, -1})});
}

int64_t HilbertData::dimension(int k) const {
  int64_t total = 0;
  for (std::size_t i = 0; i < numerator_.coeffs.size(); ++i) {
    int j = numerator_.start + int(i);
    if (j <= k) total += numerator_.coeffs[i] * binom2(k - j + 2);
  }
  return total;
}

Series HilbertData::dimensions(int from, int to) const {
  Series s{from, {}};
  for (int k = from; k <= to; ++k) s.coeffs.push_back(dimension(k));
  return s;
}

int HilbertData::krull_dimension() const {
  if (numerator_.is_zero()) return -1;
  Coeffs c = numerator_.coeffs;
  int divided = 0;
  while (divided < 3 && divide_one_minus_t(c)) ++divided;
  return 3 - divided;
}

std::optional<int64_t> HilbertData::eventual_constant() const {
  int dim = krull_dimension();
  if (dim > 1) return std::nullopt;
  if (dim <= 0) return 0;
  Coeffs c = numerator_.coeffs;
  divide_one_minus_t(c);
  divide_one_minus_t(c);
  int64_t total = 0;
  for (auto v : c) total += v;
  return total;
}

std::optional<Series> HilbertData::finite_dimensions() const {
  if (krull_dimension() > 0) return std::nullopt;
  Coeffs c = numerator_.coeffs;
  for (int i = 0; i < 3 && !c.empty(); ++i) divide_one_minus_t(c);
  return Series{numerator_.start, c}.trimmed();
}

HilbertData operator+(const HilbertData& a, const HilbertData& b) {
  if (a.numerator_.coeffs.empty()) return b;
  if (b.numerator_.coeffs.empty()) return a;
  int start = std::min(a.numerator_.start, b.numerator_.start);
  Coeffs shifted_a(a.numerator_.start - start, 0);
  shifted_a.insert(shifted_a.end(), a.numerator_.coeffs.begin(), a.numerator_.coeffs.end());
  Coeffs sum = add(shifted_a, b.numerator_.coeffs, b.numerator_.start - start);
  return HilbertData(Series{start, sum});
}

HilbertData operator-(const HilbertData& a, const HilbertData& b) {
  Series neg = b.numerator_;
  for (auto& v : neg.coeffs) v = -v;
  return a + HilbertData(neg);
}

}  // namespace planesyz

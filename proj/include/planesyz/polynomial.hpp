#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "planesyz/error.hpp"
#include "planesyz/field.hpp"
#include "planesyz/monomial.hpp"

namespace planesyz {

/// Sparse polynomial in x, y, z. Terms are kept sorted in decreasing
/// degrevlex order with no zero coefficients, so equal polynomials have
/// identical term lists.
template <typename K>
class Polynomial {
public:
  struct Term {
    Monomial mono;
    K coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;

  static Polynomial constant(const K& c) { return monomial(Monomial(), c); }
  static Polynomial monomial(Monomial m, const K& c) {
    Polynomial p;
    if (!planesyz::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(int i, const K& one) { return monomial(Monomial::variable(i), one); }

  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (planesyz::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!planesyz::is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Terms already sorted strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }

  /// Highest total degree, or -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
      return t.mono.degree() == terms_.front().mono.degree();
    });
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const K& c) const {
    if (planesyz::is_zero(c)) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  /// Multiplication by c*m; order is preserved so no re-sort is needed.
  Polynomial times_term(Monomial m, const K& c) const {
    if (planesyz::is_zero(c)) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.mono = t.mono * m;
      t.coeff *= c;
    }
    return r;
  }

  Polynomial pow(unsigned e, const K& one) const {
    Polynomial result = constant(one), base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  Polynomial derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono.exponent(var);
      if (e == 0) continue;
      K c = times_int(t.coeff, long(e));
      if (planesyz::is_zero(c)) continue;
      out.push_back({Monomial::variable(var).quotient_of(t.mono), c});
    }
    // Dividing by a variable keeps degrevlex order within a homogeneous
    // component but not across components.
    return from_terms(std::move(out));
  }

  template <typename Fn>
  auto map_coefficients(Fn&& fn) const {
    using L = decltype(fn(std::declval<const K&>()));
    std::vector<typename Polynomial<L>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      L c = fn(t.coeff);
      if (!planesyz::is_zero(c)) out.push_back({t.mono, std::move(c)});
    }
    return Polynomial<L>::from_sorted_terms(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Canonical text accepted back by the parser when coefficients are integral.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = coefficient_text(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string m = t.mono.to_string();
      if (t.mono.is_one()) {
        out += c;
      } else if (c == "1") {
        out += m;
      } else {
        out += c + "*" + m;
      }
    }
    return out;
  }

private:
  Polynomial combine(const Polynomial& b, bool subtract) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + b.terms_.size());
    auto i = terms_.begin();
    auto j = b.terms_.begin();
    while (i != terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
        r.terms_.push_back(*i++);
      } else if (i == terms_.end() || j->mono > i->mono) {
        r.terms_.push_back({j->mono, subtract ? K(-j->coeff) : j->coeff});
        ++j;
      } else {
        K c = subtract ? K(i->coeff - j->coeff) : K(i->coeff + j->coeff);
        if (!planesyz::is_zero(c)) r.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using IntPolynomial = Polynomial<mpz_class>;

template <typename F>
Polynomial<typename F::Elem> to_field(const IntPolynomial& f, const F& field) {
  return f.map_coefficients([&](const mpz_class& c) { return field.from_integer(c); });
}

/// (f_x, f_y, f_z). Throws NotHomogeneous.
template <typename K>
std::array<Polynomial<K>, 3> partial_derivatives(const Polynomial<K>& f) {
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "partial_derivatives needs a form");
  return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

/// Cofactor expansion along the first row.
template <typename K>
Polynomial<K> det3(const std::array<std::array<Polynomial<K>, 3>, 3>& r) {
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
         r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

/// Returns q with g = q*f, or throws NotDivisible. A single polynomial is a
/// Groebner basis of the ideal it generates, so a leading term of the running
/// remainder that lt(f) does not divide proves non-divisibility.
template <typename K>
Polynomial<K> exact_divide(const Polynomial<K>& g, const Polynomial<K>& f) {
  if (f.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  const auto& lead = f.leading_term();
  const K lead_inv = inverse(lead.coeff);
  std::vector<typename Polynomial<K>::Term> quotient;
  Polynomial<K> rest = g;
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    if (!lead.mono.divides(t.mono))
      throw Error(ErrorKind::NotDivisible, "leading term " + t.mono.to_string() +
                                               " not divisible by " + lead.mono.to_string());
    Monomial q = lead.mono.quotient_of(t.mono);
    K c = t.coeff * lead_inv;
    quotient.push_back({q, c});
    rest -= f.times_term(q, c);
  }
  // Quotient terms come out in decreasing order.
  return Polynomial<K>::from_sorted_terms(std::move(quotient));
}

}  // namespace planesyz

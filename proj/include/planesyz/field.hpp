#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "planesyz/error.hpp"

namespace planesyz {

/// Residue class modulo a prime p < 2^31. Each value carries its modulus so
/// arithmetic needs no ambient context.
class Fp {
public:
  Fp() = default;
  Fp(uint64_t value, uint32_t p) : v_(static_cast<uint32_t>(value % p)), p_(p) {}

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  /// Representative in (-p/2, p/2].
  int64_t symmetric() const {
    return v_ > p_ / 2 ? static_cast<int64_t>(v_) - p_ : static_cast<int64_t>(v_);
  }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) {
    uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<uint32_t>(uint64_t(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

private:
  static Fp raw(uint32_t v, uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  uint32_t v_ = 0;
  uint32_t p_ = 1;
};

/// Z/pZ as a coefficient domain for the templated algorithms.
struct PrimeField {
  using Elem = Fp;
  uint32_t p;

  Elem zero() const { return Fp(0, p); }
  Elem one() const { return Fp(1, p); }
  Elem from_integer(const mpz_class& n) const {
    mpz_class r = n % p;
    if (r < 0) r += p;
    return Fp(r.get_ui(), p);
  }
  Elem from_int(long n) const { return from_integer(mpz_class(n)); }
  unsigned long characteristic() const { return p; }
};

/// The rationals, backed by GMP.
struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem from_integer(const mpz_class& n) const { return mpq_class(n); }
  Elem from_int(long n) const { return mpq_class(n); }
  unsigned long characteristic() const { return 0; }
};

// Uniform coefficient helpers used by the polynomial templates.
inline bool is_zero(const Fp& c) { return c.is_zero(); }
inline bool is_zero(const mpq_class& c) { return sgn(c) == 0; }
inline bool is_zero(const mpz_class& c) { return sgn(c) == 0; }

inline Fp inverse(const Fp& c) { return c.inverse(); }
inline mpq_class inverse(const mpq_class& c) { return 1 / c; }

inline Fp times_int(const Fp& c, long n) {
  long r = n % static_cast<long>(c.modulus());
  if (r < 0) r += c.modulus();
  return c * Fp(static_cast<uint64_t>(r), c.modulus());
}
inline mpq_class times_int(const mpq_class& c, long n) { return c * n; }
inline mpz_class times_int(const mpz_class& c, long n) { return c * n; }

inline bool is_one(const Fp& c) { return c.value() == 1; }
inline bool is_one(const mpq_class& c) { return c == 1; }
inline bool is_one(const mpz_class& c) { return c == 1; }

/// Signed decimal text; prime-field values use the symmetric representative.
std::string coefficient_text(const Fp& c);
std::string coefficient_text(const mpq_class& c);
std::string coefficient_text(const mpz_class& c);

bool is_prime(uint64_t n);

/// Runtime description of the coefficient field chosen by the user.
class CoefficientField {
public:
  enum class Kind { PrimeField, Rationals };

  static constexpr uint32_t kDefaultPrime = 1048583;

  static CoefficientField prime(uint64_t p);
  static CoefficientField rationals() { return CoefficientField(Kind::Rationals, 0); }
  /// Accepts "qq" or "fp:<prime>".
  static CoefficientField parse(const std::string& text);

  Kind kind() const { return kind_; }
  uint32_t p() const { return p_; }
  unsigned long characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }
  std::string to_string() const;

  PrimeField prime_field() const { return PrimeField{p_}; }

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

private:
  CoefficientField(Kind kind, uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  uint32_t p_;
};

}  // namespace planesyz

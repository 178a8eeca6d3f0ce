#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace planesyz {

/// x^a y^b z^c packed into one word: 16 bits per exponent plus the degree.
/// Exponents must stay below 2^16; the curves handled here stay far below.
class Monomial {
public:
  constexpr Monomial() = default;
  constexpr Monomial(unsigned a, unsigned b, unsigned c)
      : bits_(uint64_t(a) | uint64_t(b) << 16 | uint64_t(c) << 32 | uint64_t(a + b + c) << 48) {}

  static constexpr Monomial variable(int i) {
    return Monomial(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
  }

  constexpr unsigned exponent(int i) const { return unsigned(bits_ >> (16 * i)) & 0xFFFF; }
  constexpr unsigned x() const { return exponent(0); }
  constexpr unsigned y() const { return exponent(1); }
  constexpr unsigned z() const { return exponent(2); }
  constexpr int degree() const { return int(bits_ >> 48); }
  constexpr bool is_one() const { return bits_ == 0; }

  constexpr bool divides(Monomial o) const {
    return x() <= o.x() && y() <= o.y() && z() <= o.z();
  }
  /// Requires divides(o).
  constexpr Monomial quotient_of(Monomial o) const { return from_bits(o.bits_ - bits_); }

  friend constexpr Monomial operator*(Monomial a, Monomial b) { return from_bits(a.bits_ + b.bits_); }

  friend constexpr Monomial lcm(Monomial a, Monomial b) {
    return Monomial(a.x() > b.x() ? a.x() : b.x(), a.y() > b.y() ? a.y() : b.y(),
                    a.z() > b.z() ? a.z() : b.z());
  }
  friend constexpr bool coprime(Monomial a, Monomial b) {
    return (a.x() == 0 || b.x() == 0) && (a.y() == 0 || b.y() == 0) && (a.z() == 0 || b.z() == 0);
  }

  /// Sort key for degrevlex with x > y > z: larger key means larger monomial.
  constexpr uint64_t order_key() const {
    return uint64_t(degree()) << 32 | uint64_t(0xFFFF - z()) << 16 | uint64_t(0xFFFF - y());
  }

  /// Position among the degree-d monomials listed in decreasing degrevlex order.
  constexpr std::size_t rank_in_degree() const {
    const std::size_t d = degree(), c = z();
    return c * (d + 1) - c * (c - 1) / 2 + y();
  }
  static constexpr Monomial unrank(int degree, std::size_t index) {
    unsigned c = 0;
    std::size_t base = 0;
    while (index >= base + (degree - c + 1)) {
      base += degree - c + 1;
      ++c;
    }
    unsigned b = unsigned(index - base);
    return Monomial(unsigned(degree) - b - c, b, c);
  }
  static constexpr std::size_t count_in_degree(int degree) {
    return degree < 0 ? 0 : std::size_t(degree + 1) * (degree + 2) / 2;
  }

  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    return a.order_key() <=> b.order_key();
  }

  std::string to_string() const;

private:
  static constexpr Monomial from_bits(uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }
  uint64_t bits_ = 0;
};

}  // namespace planesyz

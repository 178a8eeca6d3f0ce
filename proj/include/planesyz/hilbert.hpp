#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planesyz/monomial.hpp"

namespace planesyz {

/// Finitely supported integer sequence indexed from `start`, used for
/// graded dimensions and Hilbert numerators.
struct Series {
  int start = 0;
  std::vector<int64_t> coeffs;

  int64_t at(int k) const {
    return k < start || k >= start + int(coeffs.size()) ? 0 : coeffs[k - start];
  }
  bool is_zero() const;
  /// Strips leading and trailing zeros; the zero series gets start 0.
  Series trimmed() const;
  /// Palindromic once trimmed.
  bool is_symmetric() const;
  std::string to_string() const;

  friend bool operator==(const Series& a, const Series& b);
};

/// Hilbert series N(t) / (1-t)^3 of a graded quotient of a free S-module.
/// The numerator is a Laurent polynomial so negatively shifted generators
/// are allowed.
class HilbertData {
public:
  HilbertData() = default;
  explicit HilbertData(Series numerator) : numerator_(numerator.trimmed()) {}

  /// S/I for the monomial ideal generated by `gens`, twisted so that the
  /// free generator sits in degree `shift`.
  static HilbertData of_monomial_quotient(const std::vector<Monomial>& gens, int shift = 0);
  /// A finite-length module with the given graded dimensions.
  static HilbertData of_finite(const Series& dims);

  const Series& numerator() const { return numerator_; }
  static constexpr int denominator_power() { return 3; }

  /// Graded dimension in degree k.
  int64_t dimension(int k) const;
  /// Dimensions for degrees from..to inclusive.
  Series dimensions(int from, int to) const;

  /// Krull dimension of the module: 3 minus the multiplicity of t=1 as a
  /// root of the numerator; -1 for the zero module.
  int krull_dimension() const;
  /// For Krull dimension <= 1: the eventual constant value of the Hilbert
  /// function. Nullopt for larger dimensions.
  std::optional<int64_t> eventual_constant() const;
  /// For finite length (Krull dimension <= 0): the full list of nonzero
  /// graded dimensions. Nullopt otherwise.
  std::optional<Series> finite_dimensions() const;

  friend HilbertData operator+(const HilbertData& a, const HilbertData& b);
  friend HilbertData operator-(const HilbertData& a, const HilbertData& b);
  friend bool operator==(const HilbertData& a, const HilbertData& b) {
    return a.numerator_ == b.numerator_;
  }

private:
  Series numerator_;
};

}  // namespace planesyz

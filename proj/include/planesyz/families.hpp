#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planesyz/polynomial.hpp"

namespace planesyz {

struct FamilyParams {
  std::optional<int> r;
  std::optional<int> p;
  std::optional<int> d;
};

/// Names accepted by family().
const std::vector<std::string>& family_names();

/// Named curve families:
///   ex2               y^7 + x^7 + z(x^2 + yz)^3
///   odd-m4   r >= 3   (y^3 - x^2 z) x^(r-3) y^(r-1) + x^d + y^d,  d = 2r - 1
///   even-max p >= 2   (x^2 - yz)^(p-1) yz + x^2p + y^2p
///   odd-max  p >= 2   (x^2 - yz)^(p-1) xyz + x^(2p+1) + y^(2p+1)
///   fermat   d >= 2   x^d + y^d + z^d
///   triangle          xyz
/// Throws UnknownFamily, or OutOfRange for a missing, stray or out-of-range
/// parameter.
IntPolynomial family(const std::string& name, const FamilyParams& params);

/// Short label such as "odd-m4 r=3".
std::string family_label(const std::string& name, const FamilyParams& params);

/// Parses "<name> [params]" where params are "r=3", "p=2", "d=4" or a bare
/// integer for the family's only parameter.
std::pair<std::string, FamilyParams> parse_family_reference(const std::string& text);

}  // namespace planesyz

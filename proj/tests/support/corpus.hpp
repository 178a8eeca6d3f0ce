#pragma once

#include <string>
#include <vector>

#include "planesyz/families.hpp"

namespace corpus {

struct Curve {
  std::string name;
  planesyz::FamilyParams params;
  std::string label() const { return planesyz::family_label(name, params); }
  planesyz::IntPolynomial polynomial() const { return planesyz::family(name, params); }
};

inline std::vector<Curve> all() {
  return {
      {"triangle", {}},          {"fermat", {.d = 3}},      {"fermat", {.d = 4}},     {"fermat", {.d = 5}},
      {"ex2", {}},               {"odd-m4", {.r = 3}},      {"odd-m4", {.r = 4}},     {"even-max", {.p = 2}},
      {"even-max", {.p = 3}},    {"odd-max", {.p = 2}},     {"odd-max", {.p = 3}},
  };
}

inline std::vector<Curve> maximal_tjurina() {
  return {{"odd-m4", {.r = 3}}, {"odd-m4", {.r = 4}}, {"even-max", {.p = 2}},
          {"even-max", {.p = 3}}, {"odd-max", {.p = 2}}, {"odd-max", {.p = 3}}};
}

inline std::vector<Curve> fermat() { return {{"fermat", {.d = 3}}, {"fermat", {.d = 4}}, {"fermat", {.d = 5}}}; }

}  // namespace corpus

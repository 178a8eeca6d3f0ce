#include "planesyz/monomial.hpp"

namespace planesyz {

std::string Monomial::to_string() const {
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    unsigned e = exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace planesyz

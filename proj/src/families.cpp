#include "planesyz/families.hpp"

#include <charconv>
#include <sstream>

namespace planesyz {
namespace {

struct Spec {
  const char* name;
  char param;  // 0 when the family takes none
  int minimum;
};

constexpr Spec kFamilies[] = {
    {"ex2", 0, 0},      {"odd-m4", 'r', 3}, {"even-max", 'p', 2},
    {"odd-max", 'p', 2}, {"fermat", 'd', 2}, {"triangle", 0, 0},
};

const Spec& lookup(const std::string& name) {
  for (const auto& s : kFamilies)
    if (name == s.name) return s;
  std::string known;
  for (const auto& s : kFamilies) known += std::string(known.empty() ? "" : ", ") + s.name;
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + name + "' (known: " + known + ")");
}

const std::optional<int>& slot(const FamilyParams& p, char c) {
  return c == 'r' ? p.r : c == 'p' ? p.p : p.d;
}

int checked_parameter(const Spec& s, const FamilyParams& params) {
  for (char c : {'r', 'p', 'd'})
    if (c != s.param && slot(params, c))
      throw Error(ErrorKind::OutOfRange, std::string(s.name) + " takes no parameter " + c);
  if (!s.param) return 0;
  const auto& v = slot(params, s.param);
  if (!v) throw Error(ErrorKind::OutOfRange, std::string(s.name) + " needs " + s.param);
  if (*v < s.minimum || *v > 1000)
    throw Error(ErrorKind::OutOfRange, std::string(s.name) + ": " + s.param + " = " + std::to_string(*v) +
                                           " outside [" + std::to_string(s.minimum) + ", 1000]");
  return *v;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kFamilies) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

IntPolynomial family(const std::string& name, const FamilyParams& params) {
  const Spec& s = lookup(name);
  const int n = checked_parameter(s, params);
  const mpz_class one = 1;
  const auto x = IntPolynomial::variable(0, one), y = IntPolynomial::variable(1, one),
             z = IntPolynomial::variable(2, one);
  auto pw = [&](const IntPolynomial& f, int e) { return f.pow(unsigned(e), one); };
  const std::string which = s.name;
  if (which == "ex2") return pw(y, 7) + pw(x, 7) + z * pw(pw(x, 2) + y * z, 3);
  if (which == "odd-m4") {
    const int d = 2 * n - 1;
    return (pw(y, 3) - pw(x, 2) * z) * pw(x, n - 3) * pw(y, n - 1) + pw(x, d) + pw(y, d);
  }
  if (which == "even-max") return pw(pw(x, 2) - y * z, n - 1) * y * z + pw(x, 2 * n) + pw(y, 2 * n);
  if (which == "odd-max") return pw(pw(x, 2) - y * z, n - 1) * x * y * z + pw(x, 2 * n + 1) + pw(y, 2 * n + 1);
  if (which == "fermat") return pw(x, n) + pw(y, n) + pw(z, n);
  return x * y * z;
}

std::string family_label(const std::string& name, const FamilyParams& params) {
  const Spec& s = lookup(name);
  const int n = checked_parameter(s, params);
  return s.param ? name + " " + s.param + "=" + std::to_string(n) : name;
}

std::pair<std::string, FamilyParams> parse_family_reference(const std::string& text) {
  std::istringstream in(text);
  std::string name, token;
  if (!(in >> name)) throw Error(ErrorKind::ParseError, "empty family reference");
  const Spec& s = lookup(name);
  FamilyParams params;
  auto number = [&](std::string_view v) {
    int out = 0;
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || end != v.data() + v.size() || v.empty())
      throw Error(ErrorKind::ParseError, "bad family parameter '" + token + "'");
    return out;
  };
  auto assign = [&](char key, int value) {
    std::optional<int>& target = key == 'r' ? params.r : key == 'p' ? params.p : params.d;
    if (target) throw Error(ErrorKind::ParseError, std::string("parameter ") + key + " given twice");
    target = value;
  };
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      if (!s.param) throw Error(ErrorKind::OutOfRange, name + " takes no parameters");
      assign(s.param, number(token));
    } else if (eq == 1 && (token[0] == 'r' || token[0] == 'p' || token[0] == 'd')) {
      assign(token[0], number(std::string_view(token).substr(2)));
    } else {
      throw Error(ErrorKind::ParseError, "bad family parameter '" + token + "'");
    }
  }
  return {name, params};
}

}  // namespace planesyz

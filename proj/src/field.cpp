#include "planesyz/field.hpp"

#include <charconv>

namespace planesyz {

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(ErrorKind::InternalInconsistency, "inverse of zero in F_p");
  int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    int64_t q = a / b;
    int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (x0 < 0) x0 += p_;
  return Fp(static_cast<uint64_t>(x0), p_);
}

std::string coefficient_text(const Fp& c) { return std::to_string(c.symmetric()); }
std::string coefficient_text(const mpq_class& c) { return c.get_str(); }
std::string coefficient_text(const mpz_class& c) { return c.get_str(); }

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientField CoefficientField::prime(uint64_t p) {
  if (p >= (uint64_t{1} << 31))
    throw Error(ErrorKind::InvalidField, "prime must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p)) throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
  return CoefficientField(Kind::PrimeField, static_cast<uint32_t>(p));
}

CoefficientField CoefficientField::parse(const std::string& text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last && first != last) return prime(p);
  }
  throw Error(ErrorKind::InvalidField, "expected 'qq' or 'fp:<prime>', got '" + text + "'");
}

std::string CoefficientField::to_string() const {
  return kind_ == Kind::Rationals ? "qq" : "fp:" + std::to_string(p_);
}

}  // namespace planesyz

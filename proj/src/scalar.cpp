#include "loopdual/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace loopdual {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::abs(a / std::gcd(a, b) * b);
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput("not a prime: " + std::to_string(p));
  return Ring(RingKind::prime_field, p);
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z" || text == "ZZ") return integers();
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (!text.empty() && (text[0] == 'F' || text[0] == 'f')) {
    std::size_t pos = 1;
    if (pos < text.size() && text[pos] == '_') ++pos;
    digits = text.substr(pos);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidInput("unrecognised ring: '" + text + "'");
  return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::integers: return "Z";
    case RingKind::rationals: return "Q";
    case RingKind::prime_field: return "F_" + std::to_string(p_);
  }
  return "?";
}

Scalar Ring::normalize(const Scalar& x) const {
  if (kind_ != RingKind::prime_field) return x;
  return image(x);
}

Scalar Ring::image(const Scalar& x) const {
  switch (kind_) {
    case RingKind::rationals: return x;
    case RingKind::integers:
      if (x.get_den() != 1) throw RingMismatch("non-integral value " + x.get_str() + " in Z");
      return x;
    case RingKind::prime_field: {
      mpz_class p(p_);
      mpz_class num = x.get_num() % p;
      if (num < 0) num += p;
      if (x.get_den() == 1) return Scalar(num);
      mpz_class den = x.get_den() % p;
      if (den == 0)
        throw RingMismatch("denominator of " + x.get_str() + " vanishes in " + name());
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      mpz_class r = (num * inv) % p;
      return Scalar(r);
    }
  }
  return x;
}

bool Ring::is_unit(const Scalar& a) const {
  switch (kind_) {
    case RingKind::integers: return a == 1 || a == -1;
    case RingKind::rationals: return a != 0;
    case RingKind::prime_field: return normalize(a) != 0;
  }
  return false;
}

Scalar Ring::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw std::domain_error(a.get_str() + " is not invertible in " + name());
  if (kind_ == RingKind::prime_field) return image(Scalar(1) / normalize(a));
  return Scalar(1) / a;
}

}  // namespace loopdual

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace loopdual {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mathematically invalid input (bad Cartan matrix, lattice, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between objects living over different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A prime dividing the length ratio was requested where it is excluded.
class BadPrime : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A configurable resource cap (Groebner S-pair budget) was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

using Scalar = mpq_class;

enum class RingKind { integers, rationals, prime_field };

/// Coefficient ring descriptor: Z, Q or F_p. Scalars are stored as mpq_class;
/// over F_p they are kept as integer representatives in [0, p).
class Ring {
 public:
  static Ring integers() { return Ring(RingKind::integers, 0); }
  static Ring rationals() { return Ring(RingKind::rationals, 0); }
  static Ring prime_field(std::uint32_t p);
  /// Parses "Z", "Q", "F2", "F_7", ...
  static Ring parse(const std::string& text);

  RingKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != RingKind::integers; }
  std::string name() const;

  Scalar normalize(const Scalar& x) const;
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  bool is_unit(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inverse(b)); }
  /// Maps a rational number into this ring; throws if a denominator is not invertible.
  Scalar image(const Scalar& x) const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Ring(RingKind k, std::uint32_t p) : kind_(k), p_(p) {}
  RingKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::string to_string(const Scalar& x);

}  // namespace loopdual

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "gral/error.hpp"

namespace gral {

enum class RingKind : std::uint8_t { prime_field, rationals, integers };

/// Exact coefficient ring: GF(p) for prime p, the rationals, or the integers.
class CoefficientRing {
 public:
  static CoefficientRing prime_field(std::uint64_t p);
  static CoefficientRing rationals() noexcept { return CoefficientRing(RingKind::rationals, 0); }
  static CoefficientRing integers() noexcept { return CoefficientRing(RingKind::integers, 0); }

  /// Accepts "GF(p)", a bare prime "p", "Q"/"QQ" and "Z"/"ZZ".
  static CoefficientRing parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != RingKind::integers; }
  bool is_prime_field() const noexcept { return kind_ == RingKind::prime_field; }
  std::string name() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(RingKind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  RingKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of a CoefficientRing in canonical form: residues in [0, p),
/// reduced fractions with positive denominator, or arbitrary-precision integers.
/// Equality is representational.
class Scalar {
 public:
  explicit Scalar(const CoefficientRing& ring);  // zero

  static Scalar zero(const CoefficientRing& ring) { return Scalar(ring); }
  static Scalar one(const CoefficientRing& ring) { return from_int(ring, 1); }
  static Scalar from_int(const CoefficientRing& ring, long long value);
  static Scalar from_integer(const CoefficientRing& ring, const mpz_class& value);
  /// Over GF(p) the denominator must be invertible; over Z it must be 1.
  static Scalar from_rational(const CoefficientRing& ring, const mpq_class& value);
  /// Parses "n", "-n" or "a/b".
  static Scalar parse(const CoefficientRing& ring, std::string_view text);

  const CoefficientRing& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const mpz_class& integer() const { return std::get<mpz_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Value as a rational number (GF(p) residues map to their representative).
  mpq_class to_rational() const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_ring(const Scalar& other) const;

  CoefficientRing ring_;
  std::variant<std::uint32_t, mpz_class, mpq_class> value_;
};

Scalar inverse(const Scalar& a);  // throws NonUnit
bool is_unit(const Scalar& a) noexcept;

enum class ScalarOp { add, mul, neg, inv };

/// Single entry point for the four ring operations; `b` is ignored for neg/inv.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

}  // namespace gral

#include "gral/scalar.hpp"

#include <charconv>
#include <utility>

namespace gral {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  if (!is_prime(p) || p > 0x7FFFFFFFu)
    throw Error(ErrorCode::bad_params, "GF(p) needs a prime p below 2^31, got " + std::to_string(p));
  return CoefficientRing(RingKind::prime_field, static_cast<std::uint32_t>(p));
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Z" || text == "ZZ") return integers();
  if (text.starts_with("GF(") && text.ends_with(")")) text = text.substr(3, text.size() - 4);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::bad_params, "unknown coefficient ring '" + std::string(text) + "'");
  return prime_field(p);
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case RingKind::prime_field: return "GF(" + std::to_string(p_) + ")";
    case RingKind::rationals: return "Q";
    case RingKind::integers: return "Z";
  }
  return "?";
}

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on small integers.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar::Scalar(const CoefficientRing& ring) : ring_(ring) {
  switch (ring.kind()) {
    case RingKind::prime_field: value_ = std::uint32_t{0}; break;
    case RingKind::rationals: value_ = mpq_class(0); break;
    case RingKind::integers: value_ = mpz_class(0); break;
  }
}

Scalar Scalar::from_int(const CoefficientRing& ring, long long value) {
  return from_integer(ring, mpz_class(std::to_string(value)));
}

Scalar Scalar::from_integer(const CoefficientRing& ring, const mpz_class& value) {
  Scalar s(ring);
  switch (ring.kind()) {
    case RingKind::prime_field: s.value_ = reduce_mod(value, ring.characteristic()); break;
    case RingKind::rationals: s.value_ = mpq_class(value); break;
    case RingKind::integers: s.value_ = value; break;
  }
  return s;
}

Scalar Scalar::from_rational(const CoefficientRing& ring, const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  switch (ring.kind()) {
    case RingKind::rationals: {
      Scalar s(ring);
      s.value_ = v;
      return s;
    }
    case RingKind::integers:
      if (v.get_den() != 1) throw Error(ErrorCode::invalid_input, v.get_str() + " is not an integer");
      return from_integer(ring, v.get_num());
    case RingKind::prime_field: {
      Scalar den = from_integer(ring, v.get_den());
      if (den.is_zero()) throw Error(ErrorCode::non_unit, "denominator vanishes in " + ring.name());
      return from_integer(ring, v.get_num()) * inverse(den);
    }
  }
  return Scalar(ring);
}

Scalar Scalar::parse(const CoefficientRing& ring, std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw Error(ErrorCode::invalid_input, "cannot parse scalar '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::invalid_input, "zero denominator in '" + std::string(text) + "'");
  return from_rational(ring, q);
}

bool Scalar::is_zero() const noexcept {
  switch (ring_.kind()) {
    case RingKind::prime_field: return std::get<std::uint32_t>(value_) == 0;
    case RingKind::rationals: return std::get<mpq_class>(value_) == 0;
    case RingKind::integers: return std::get<mpz_class>(value_) == 0;
  }
  return false;
}

bool Scalar::is_one() const noexcept {
  switch (ring_.kind()) {
    case RingKind::prime_field: return std::get<std::uint32_t>(value_) == 1;
    case RingKind::rationals: return std::get<mpq_class>(value_) == 1;
    case RingKind::integers: return std::get<mpz_class>(value_) == 1;
  }
  return false;
}

mpq_class Scalar::to_rational() const {
  switch (ring_.kind()) {
    case RingKind::prime_field: return mpq_class(std::get<std::uint32_t>(value_));
    case RingKind::rationals: return std::get<mpq_class>(value_);
    case RingKind::integers: return mpq_class(std::get<mpz_class>(value_));
  }
  return 0;
}

std::string Scalar::to_string() const {
  switch (ring_.kind()) {
    case RingKind::prime_field: return std::to_string(std::get<std::uint32_t>(value_));
    case RingKind::rationals: return std::get<mpq_class>(value_).get_str();
    case RingKind::integers: return std::get<mpz_class>(value_).get_str();
  }
  return "?";
}

void Scalar::require_same_ring(const Scalar& other) const {
  if (!(ring_ == other.ring_))
    throw Error(ErrorCode::ring_mismatch, ring_.name() + " vs " + other.ring_.name());
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_ring(other);
  switch (ring_.kind()) {
    case RingKind::prime_field: {
      auto& v = std::get<std::uint32_t>(value_);
      v = static_cast<std::uint32_t>((std::uint64_t{v} + other.residue()) % ring_.characteristic());
      break;
    }
    case RingKind::rationals: std::get<mpq_class>(value_) += other.rational(); break;
    case RingKind::integers: std::get<mpz_class>(value_) += other.integer(); break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_ring(other);
  switch (ring_.kind()) {
    case RingKind::prime_field: {
      auto& v = std::get<std::uint32_t>(value_);
      v = static_cast<std::uint32_t>((std::uint64_t{v} * other.residue()) % ring_.characteristic());
      break;
    }
    case RingKind::rationals: std::get<mpq_class>(value_) *= other.rational(); break;
    case RingKind::integers: std::get<mpz_class>(value_) *= other.integer(); break;
  }
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar r(a.ring_);
  switch (a.ring_.kind()) {
    case RingKind::prime_field: {
      std::uint32_t v = a.residue();
      r.value_ = v == 0 ? 0u : a.ring_.characteristic() - v;
      break;
    }
    case RingKind::rationals: r.value_ = mpq_class(-a.rational()); break;
    case RingKind::integers: r.value_ = mpz_class(-a.integer()); break;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.ring_ == b.ring_)) return false;
  return a.value_ == b.value_;
}

bool is_unit(const Scalar& a) noexcept {
  switch (a.ring().kind()) {
    case RingKind::prime_field:
    case RingKind::rationals: return !a.is_zero();
    case RingKind::integers: return a.integer() == 1 || a.integer() == -1;
  }
  return false;
}

Scalar inverse(const Scalar& a) {
  if (!is_unit(a)) throw Error(ErrorCode::non_unit, a.to_string() + " is not a unit in " + a.ring().name());
  switch (a.ring().kind()) {
    case RingKind::prime_field:
      return Scalar::from_int(a.ring(), inverse_mod(a.residue(), a.ring().characteristic()));
    case RingKind::rationals: return Scalar::from_rational(a.ring(), 1 / a.rational());
    case RingKind::integers: return a;  // ±1
  }
  return a;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::neg: return -a;
    case ScalarOp::inv: return inverse(a);
  }
  return a;
}

}  // namespace gral

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <sumprod/errors.hpp>

namespace sumprod {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact binary logarithm of a positive rational, evaluated in double
/// precision from the full integer data (not via a lossy double quotient).
double log2_rational(const Rational& q);

/// Parse "num/den" or "num" into a canonical rational. Throws usage_error.
Rational parse_rational(std::string_view text);

std::string rational_str(const Rational& q);

/* Ambient field descriptor: F_p for a word-sized prime p, or Q.
   Q stands in for the reals; every finitely supported real distribution
   used here can be realized with rational atoms. */
class FieldSpec {
public:
  enum class Kind { prime_field, rationals };

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  static FieldSpec parse(std::string_view text); // "p=5" or "Q"

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }
  std::uint64_t p() const;

  bool operator==(const FieldSpec& other) const = default;
  std::string str() const;

private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/* A field element in canonical form: residue in [0, p) for F_p, reduced
   fraction with positive denominator for Q. Equality is structural. */
class Scalar {
public:
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar residue(const FieldSpec& f, std::uint64_t r);
  static Scalar rational(Rational q);
  static Scalar from_int(const FieldSpec& f, long long n);
  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

  /// Text form: decimal residue over F_p, "num/den" or "num" over Q.
  /// parse/str round-trip bit-exactly.
  static Scalar parse(const FieldSpec& f, std::string_view text);
  std::string str() const;

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  std::uint64_t res() const { return res_; } // prime_field only
  const Rational& rat() const { return q_; } // rationals only

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar neg() const;
  Scalar inv() const; // throws std::domain_error on zero

  bool operator==(const Scalar& o) const;
  /// Canonical order within one field: residue order / numeric order.
  std::strong_ordering operator<=>(const Scalar& o) const;

private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::uint64_t res_ = 0;
  Rational q_;
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

} // namespace sumprod

#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "chromo/error.hpp"

namespace chromo {

class Scalar;

/// Identifies the field a Scalar lives in: the rationals, or F_p for an odd
/// prime p < 2^32.
class FieldSpec {
 public:
  enum class Kind { rational, prime };

  /// The rational field. Also what a default-constructed FieldSpec is.
  FieldSpec() = default;
  static FieldSpec rational() { return FieldSpec{}; }
  /// Throws InvalidField unless `p` is an odd prime below 2^32.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q", "Q", "rational", or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  /// Zero for the rationals.
  std::uint64_t modulus() const { return modulus_; }
  /// Characteristic of the field (0 for the rationals).
  std::uint64_t characteristic() const { return modulus_; }

  Scalar from_int(long long v) const;
  Scalar zero() const;
  Scalar one() const;

  /// "Q" or "fp:<p>".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::rational;
  std::uint64_t modulus_ = 0;
};

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const FieldSpec& field, long long v);
  /// Builds the image of num/den in `field`. Throws DivisionByZero if den maps to zero.
  Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
  /// A rational value; canonicalizes its argument.
  explicit Scalar(mpq_class q);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;

  /// Only valid on rational scalars; throws InvalidField otherwise.
  const mpq_class& rational() const;
  /// Only valid on F_p scalars; throws InvalidField otherwise.
  std::uint64_t residue() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  // Integer literals are mapped into the field of the Scalar operand.
  template <std::integral I>
  friend Scalar operator+(const Scalar& lhs, I rhs) { return lhs + lhs.field_.from_int(rhs); }
  template <std::integral I>
  friend Scalar operator-(const Scalar& lhs, I rhs) { return lhs - lhs.field_.from_int(rhs); }
  template <std::integral I>
  friend Scalar operator*(const Scalar& lhs, I rhs) { return lhs * lhs.field_.from_int(rhs); }
  template <std::integral I>
  friend Scalar operator/(const Scalar& lhs, I rhs) { return lhs / lhs.field_.from_int(rhs); }
  template <std::integral I>
  friend Scalar operator+(I lhs, const Scalar& rhs) { return rhs.field_.from_int(lhs) + rhs; }
  template <std::integral I>
  friend Scalar operator-(I lhs, const Scalar& rhs) { return rhs.field_.from_int(lhs) - rhs; }
  template <std::integral I>
  friend Scalar operator*(I lhs, const Scalar& rhs) { return rhs.field_.from_int(lhs) * rhs; }

  Scalar inverse() const;
  /// x / 2; always defined since the characteristic is never two.
  Scalar halve() const;
  Scalar squared() const { return *this * *this; }

  /// Values from different fields compare unequal.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  template <std::integral I>
  friend bool operator==(const Scalar& lhs, I rhs) { return lhs == lhs.field_.from_int(rhs); }

  /// Canonical text: "n" or "n/d" (d > 1) for rationals, "k" (0 <= k < p) for F_p.
  std::string format() const;
  /// Nearest double; rational field only.
  double to_double() const;

 private:
  Scalar(const FieldSpec& field, std::uint64_t residue, bool);
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

/// Parses "n" or "n/d" (optional leading sign on either part) into `field`.
/// Throws ParseError on malformed text and DivisionByZero on a zero denominator.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

inline std::string format_scalar(const Scalar& s) { return s.format(); }

}  // namespace chromo

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wqg {

/// The coefficient field: the rationals, or Z/p for a prime p < 2^62.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec(); }
  /// Throws InvalidInput unless p is a prime below 2^62.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }

  /// "Q" or "F_p".
  std::string to_string() const;
  /// Accepts "Q", "F_p", "Fp" and a bare prime "p".
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; values that do not fit two machine words spill into GMP.
/// Residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(FieldSpec field, std::int64_t value);
  /// num/den in the given field; throws DivisionByZero for den = 0.
  Scalar(FieldSpec field, std::int64_t num, std::int64_t den);

  static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }
  static Scalar from_mpq(FieldSpec f, const mpq_class& q);

  /// Parses "3", "-5/7" (rational) or an integer residue (prime field).
  /// Throws ParseError on malformed input or a zero denominator.
  static Scalar parse(FieldSpec f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return big_ == nullptr && a_ == 0; }
  bool is_one() const { return big_ == nullptr && a_ == 1 && (field_.is_prime() || b_ == 1); }

  /// Canonical text: "0", "-5/7", or the residue.
  std::string to_string() const;
  /// Exact rational value (rational fields only).
  mpq_class to_mpq() const;
  /// Residue (prime fields only).
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend bool operator==(const Scalar& x, const Scalar& y);

 private:
  void set_rational(const mpq_class& q);
  void set_rational_small(__int128 num, __int128 den);

  FieldSpec field_;
  // Rational: a_/b_ when big_ is null. Prime field: a_ is the residue.
  std::int64_t a_ = 0;
  std::int64_t b_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace wqg

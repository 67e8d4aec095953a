#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qkneser {

using BigInt = mpz_class;
using Rational = mpq_class;
using Exponent = std::int64_t;

/**
 * Laurent polynomial in one indeterminate q with arbitrary-precision integer
 * coefficients.
 *
 * Stored sparsely as exponent -> coefficient. Zero coefficients are never
 * stored, so two values are equal exactly when their term maps are equal and
 * the zero polynomial has no terms.
 */
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;

  /// Builds from an arbitrary term map, dropping zero coefficients.
  static LaurentPoly from_terms(Terms terms);
  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, Exponent e);
  /// The indeterminate itself.
  static LaurentPoly q() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no exponent is negative.
  bool is_polynomial() const;
  BigInt coefficient(Exponent e) const;
  std::optional<Exponent> min_exponent() const;
  std::optional<Exponent> max_exponent() const;
  /// Coefficient of the highest power; zero for the zero polynomial.
  BigInt leading_coefficient() const;
  /// Sum of all coefficients (value at q = 1).
  BigInt coefficient_sum() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  explicit LaurentPoly(Terms terms) : terms_(std::move(terms)) {}
  void normalize();

  Terms terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
/// Multiplication by the monomial q^e.
LaurentPoly shift(const LaurentPoly& a, Exponent e);
/// (-1)^k as a constant polynomial.
LaurentPoly sign_power(Exponent k);

/// Exact value at q = q0. Throws std::invalid_argument for q0 < 2.
Rational evaluate(const LaurentPoly& a, const BigInt& q0);

/// Canonical rendering, decreasing exponents: "q^4 + q^3 + 2*q^2 + q + 1",
/// "-q^-1 - q^-2", "0".
std::string to_string(const LaurentPoly& a);
/// Inverse of to_string. Accepts any term order and merges repeated
/// exponents. Throws std::invalid_argument on malformed input.
LaurentPoly parse_laurent(std::string_view text);

/// "35", "-3/4".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

}  // namespace qkneser

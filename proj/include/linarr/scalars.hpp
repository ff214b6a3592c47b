#pragma once

/**
 * @file scalars.hpp
 * @brief Exact arithmetic over Q and over number fields K = Q[t]/(m(t)).
 *
 * Every coefficient in the library lives in some K. Elements are stored as
 * reduced residues (coordinates in the basis 1, t, ..., t^{n-1}) with
 * canonical GMP rationals, so equality is coordinate-wise.
 */

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linarr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for mathematical failures: division by zero, mismatched fields,
/// non-exact division, violated preconditions of an operation.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two computations that must agree do not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by the text parsers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// K = Q[t]/(m(t)) for a monic m of degree >= 1.
class NumberField {
 public:
  /// Coefficients low to high. Throws MathError unless monic of degree >= 1.
  explicit NumberField(std::vector<Rational> modulus);

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  const std::vector<Rational>& modulus() const { return modulus_; }

  /// Reduces a coefficient vector (low to high, any length) modulo m.
  std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

  std::string to_string() const;

  bool operator==(const NumberField& other) const { return modulus_ == other.modulus_; }

 private:
  std::vector<Rational> modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<Rational> modulus);

/// Q presented as Q[t]/(t - 1).
FieldPtr rational_field();

/// Q(zeta_n), modulus the n-th cyclotomic polynomial.
FieldPtr make_cyclotomic(int n);

/// The n-th cyclotomic polynomial, low to high.
std::vector<Rational> cyclotomic_polynomial(int n);

bool same_field(const FieldPtr& a, const FieldPtr& b);

class FieldScalar {
 public:
  /// Zero of K.
  explicit FieldScalar(FieldPtr field);
  FieldScalar(FieldPtr field, const Rational& value);
  FieldScalar(FieldPtr field, long value) : FieldScalar(std::move(field), Rational(value)) {}
  /// Residue of the polynomial sum coeffs[i] t^i.
  FieldScalar(FieldPtr field, std::vector<Rational> coeffs);

  /// The class of t.
  static FieldScalar generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the residue is a constant polynomial.
  bool is_rational() const;
  const Rational& constant_term() const { return coords_[0]; }

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& rhs);
  FieldScalar& operator-=(const FieldScalar& rhs);
  FieldScalar& operator*=(const FieldScalar& rhs);
  FieldScalar& operator/=(const FieldScalar& rhs);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  FieldScalar operator*(const Rational& r) const;

  /// Multiplicative inverse via extended Euclid on (residue, m).
  FieldScalar inverse() const;
  FieldScalar pow(unsigned e) const;

  bool operator==(const FieldScalar& other) const;
  /// Lexicographic order on coordinates; only meaningful inside one field.
  std::strong_ordering operator<=>(const FieldScalar& other) const;

  /// Scalar literal syntax: "p/q" over Q, a polynomial in t otherwise.
  std::string to_string() const;

 private:
  void check_field(const FieldScalar& other) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// Parses "3", "-2/5", "1/2*t^2 - 3", "t + 1" into coefficients (low to high).
std::vector<Rational> parse_univariate(std::string_view text);

/// Renders coefficients (low to high) as a polynomial in t.
std::string format_univariate(const std::vector<Rational>& coeffs);

FieldScalar parse_scalar(std::string_view text, const FieldPtr& field);

std::string format_rational(const Rational& r);

}  // namespace linarr

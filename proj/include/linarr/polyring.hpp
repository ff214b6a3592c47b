#pragma once

// Sparse homogeneous polynomials in K[x,y,z] or K[y,z], and derivations.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "linarr/scalars.hpp"

namespace linarr {

struct Monomial {
  int a = 0, b = 0, c = 0;  // exponents of x, y, z

  int degree() const { return a + b + c; }
  bool operator==(const Monomial&) const = default;
};

/// Monomials of degree k, lexicographic with x > y > z. With nvars == 2 the
/// x exponent is always 0.
std::vector<Monomial> monomials(int nvars, int k);

/// Position of m in monomials(nvars, m.degree()).
std::size_t monomial_index(int nvars, const Monomial& m);

/// dim S_k: C(k+2, 2) in three variables, k+1 in two, 0 for k < 0.
std::size_t num_monomials(int nvars, int k);

class HomPoly {
 public:
  using Key = std::uint64_t;
  using Terms = std::map<Key, FieldScalar, std::greater<Key>>;

  /// The zero polynomial of the given degree.
  HomPoly(FieldPtr field, int nvars, int degree);

  static HomPoly constant(const FieldScalar& c, int nvars);
  static HomPoly variable(const FieldPtr& field, int nvars, int var);  // 0 = x, 1 = y, 2 = z
  static HomPoly term(const FieldScalar& c, int nvars, const Monomial& m);
  static HomPoly linear(const FieldScalar& alpha, const FieldScalar& beta, const FieldScalar& gamma);
  /// Coefficients listed in the order of monomials(nvars, degree).
  static HomPoly from_coeffs(const FieldPtr& field, int nvars, int degree, const std::vector<FieldScalar>& coeffs);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  FieldScalar coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const FieldScalar& c);

  /// Dense coefficient vector in the order of monomials(nvars, degree).
  std::vector<FieldScalar> coeffs() const;

  /// Leading monomial in lex order with x > y > z; requires nonzero.
  Monomial leading_monomial() const;
  const FieldScalar& leading_coeff() const;

  HomPoly operator-() const;
  HomPoly& operator+=(const HomPoly& rhs);
  HomPoly& operator-=(const HomPoly& rhs);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  HomPoly operator*(const FieldScalar& c) const;
  HomPoly operator*(const Rational& c) const;
  HomPoly pow(unsigned e) const;

  /// Partial derivative; var 0 = x, 1 = y, 2 = z.
  HomPoly partial(int var) const;

  /// Value at (u, v, w); for bivariate polynomials only v and w are used.
  FieldScalar eval(const FieldScalar& u, const FieldScalar& v, const FieldScalar& w) const;

  /// p(0, y, z) as a bivariate polynomial.
  HomPoly restrict_x0() const;
  /// Bivariate p(y, z) viewed in three variables.
  HomPoly lift3() const;

  /// Multiplication by a monomial.
  HomPoly shifted(const Monomial& m) const;

  bool operator==(const HomPoly& other) const;

  std::string to_string() const;

  static Key pack(const Monomial& m) {
    return (static_cast<Key>(m.a) << 42) | (static_cast<Key>(m.b) << 21) | static_cast<Key>(m.c);
  }
  static Monomial unpack(Key k) {
    return {static_cast<int>(k >> 42), static_cast<int>((k >> 21) & 0x1FFFFF), static_cast<int>(k & 0x1FFFFF)};
  }

 private:
  void check_compatible(const HomPoly& other) const;

  FieldPtr field_;
  int nvars_;
  int degree_;
  Terms terms_;
};

/// Exact quotient p / q; throws MathError("not divisible") otherwise.
HomPoly exact_div(const HomPoly& p, const HomPoly& q);

/// p o M, i.e. p(M (x,y,z)^T). M is row-major 3x3.
struct Matrix3 {
  std::vector<FieldScalar> e;  // 9 entries

  static Matrix3 identity(const FieldPtr& field);
  const FieldScalar& operator()(int i, int j) const { return e[3 * i + j]; }
  FieldScalar& operator()(int i, int j) { return e[3 * i + j]; }
  Matrix3 operator*(const Matrix3& o) const;
  FieldScalar det() const;
  Matrix3 inverse() const;
  const FieldPtr& field() const { return e[0].field(); }
};

HomPoly substitute_linear(const HomPoly& p, const Matrix3& M);

/// Number of distinct points of P^1 where the bivariate p vanishes.
int binary_distinct_roots(const HomPoly& p);

/// True when a and b span a line (both nonzero, one a scalar multiple of
/// the other), or both are zero.
bool proportional(const HomPoly& a, const HomPoly& b);

/// a d/dx + b d/dy + c d/dz with a, b, c of one degree.
struct Derivation {
  HomPoly a, b, c;

  Derivation(HomPoly a_, HomPoly b_, HomPoly c_);
  static Derivation zero(const FieldPtr& field, int degree);
  static Derivation euler(const FieldPtr& field);
  /// Constant derivation u d/dx + v d/dy + w d/dz.
  static Derivation constant(const FieldScalar& u, const FieldScalar& v, const FieldScalar& w);
  /// Splits a flat vector (a-block, b-block, c-block) of length 3 dim S_k.
  static Derivation from_flat(const FieldPtr& field, int degree, const std::vector<FieldScalar>& v);

  int degree() const { return a.degree(); }
  const FieldPtr& field() const { return a.field(); }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
  std::vector<FieldScalar> flat() const;

  /// a g_x + b g_y + c g_z.
  HomPoly apply(const HomPoly& g) const;
  std::vector<FieldScalar> eval(const FieldScalar& u, const FieldScalar& v, const FieldScalar& w) const;

  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;
  Derivation operator*(const HomPoly& h) const;
  Derivation operator*(const FieldScalar& s) const;
  bool operator==(const Derivation& o) const { return a == o.a && b == o.b && c == o.c; }
  std::string to_string() const;
};

/// b d/dy + c d/dz in K[y,z].
struct BiDerivation {
  HomPoly b, c;

  BiDerivation(HomPoly b_, HomPoly c_);
  int degree() const { return b.degree(); }
  bool is_zero() const { return b.is_zero() && c.is_zero(); }
  HomPoly apply(const HomPoly& g) const;
  std::vector<FieldScalar> flat() const;
  BiDerivation operator*(const HomPoly& h) const;
  BiDerivation operator*(const FieldScalar& s) const;
  bool operator==(const BiDerivation& o) const { return b == o.b && c == o.c; }
  std::string to_string() const;
};

/// True when the two derivations are K-proportional (zero counts as
/// proportional only to zero).
bool proportional(const std::vector<FieldScalar>& a, const std::vector<FieldScalar>& b);

}  // namespace linarr

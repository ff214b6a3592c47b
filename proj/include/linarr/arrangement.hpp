#pragma once

// Line arrangements in P^2 and their intersection lattice.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linarr/polyring.hpp"
#include "linarr/scalars.hpp"

namespace linarr {

/// Point (u:v:w) of P^2, scaled so the first nonzero coordinate is 1.
struct ProjPoint {
  FieldScalar u, v, w;

  ProjPoint(FieldScalar u_, FieldScalar v_, FieldScalar w_);
  static ProjPoint make(const FieldPtr& field, long u, long v, long w);

  const FieldPtr& field() const { return u.field(); }
  bool operator==(const ProjPoint& o) const { return u == o.u && v == o.v && w == o.w; }
  std::strong_ordering operator<=>(const ProjPoint& o) const;
  std::string to_string() const;
};

/// Line alpha x + beta y + gamma z = 0, scaled so the first nonzero
/// coefficient is 1.
struct LinearForm {
  FieldScalar alpha, beta, gamma;

  LinearForm(FieldScalar a, FieldScalar b, FieldScalar c);
  static LinearForm make(const FieldPtr& field, long a, long b, long c);

  const FieldPtr& field() const { return alpha.field(); }
  HomPoly poly() const { return HomPoly::linear(alpha, beta, gamma); }
  FieldScalar eval(const ProjPoint& p) const { return alpha * p.u + beta * p.v + gamma * p.w; }
  bool contains(const ProjPoint& p) const { return eval(p).is_zero(); }
  bool operator==(const LinearForm& o) const { return alpha == o.alpha && beta == o.beta && gamma == o.gamma; }
  std::strong_ordering operator<=>(const LinearForm& o) const;
  std::string to_string() const;
};

/// Common point of two distinct lines.
ProjPoint intersect(const LinearForm& l1, const LinearForm& l2);
/// Line through two distinct points.
LinearForm join(const ProjPoint& p, const ProjPoint& q);
/// True when the three points lie on one line.
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

struct LatticePoint {
  ProjPoint point;
  int multiplicity = 0;
  std::vector<int> incident;  // line indices, increasing
};

struct EulerNumbers {
  long by_tau = 0;     // 3 - (2 - (d-1)(d-2) + tau)
  long by_strata = 0;  // 3 - (2d - sum (m_p - 1))
};

class Arrangement {
 public:
  /// Validates d >= 2 and distinct lines; builds the lattice.
  Arrangement(FieldPtr field, std::vector<LinearForm> lines);

  const FieldPtr& field() const { return field_; }
  const std::vector<LinearForm>& lines() const { return lines_; }
  int degree() const { return static_cast<int>(lines_.size()); }
  const std::vector<LatticePoint>& lattice() const { return lattice_; }

  /// Index of the lattice point at p, if p is a multiple point.
  std::optional<std::size_t> find_point(const ProjPoint& p) const;
  /// Index of the line, if it belongs to the arrangement.
  std::optional<std::size_t> find_line(const LinearForm& l) const;
  bool has_line(const LinearForm& l) const { return find_line(l).has_value(); }

  int max_multiplicity() const;
  bool is_pencil() const { return max_multiplicity() == degree(); }
  long tau() const;
  HomPoly defining_poly() const;
  /// Product of the lines with the given indices (1 for an empty set).
  HomPoly product(const std::vector<int>& indices) const;

  /// (f_{1p}, f_{2p}): lines through p and lines missing p.
  std::pair<HomPoly, HomPoly> split_at(const LatticePoint& p) const;

  /// True when the line through p and q belongs to the arrangement.
  bool connected(const ProjPoint& p, const ProjPoint& q) const;
  /// Lattice points q != p not connected to p.
  std::vector<std::size_t> unconnected_points(std::size_t p) const;
  std::vector<std::size_t> modular_points() const;
  bool is_supersolvable() const;
  /// Both Euler characteristic formulas; throws InternalError on mismatch.
  EulerNumbers euler_complement() const;

  /// The arrangement with one line removed.
  Arrangement deleted(std::size_t line) const;
  /// Each form l replaced by l o M (the coordinate change v -> M v).
  Arrangement substituted(const Matrix3& M) const;

 private:
  void build_lattice();

  FieldPtr field_;
  std::vector<LinearForm> lines_;
  std::vector<LatticePoint> lattice_;
};

/// Text format: `field: <modulus in t>` then one `alpha, beta, gamma` line
/// per form; `#` starts a comment.
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement_text(const std::string& text);
std::string format_arrangement(const Arrangement& a);

}  // namespace linarr

#pragma once

// The graded module D_0(f) of Jacobian syzygies a f_x + b f_y + c f_z = 0.

#include <map>
#include <optional>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/polyring.hpp"
#include "linarr/report.hpp"

namespace linarr {

struct GradedBasis {
  int degree = 0;
  std::vector<Derivation> elements;
};

/// Kernel basis of (a,b,c) -> a f_x + b f_y + c f_z on S_k^3, ordered by the
/// free column of the echelon form (a-block, then b, then c, monomials lex).
GradedBasis graded_piece(const HomPoly& f, int k);

/// Graded pieces of D_0(f) for 0 <= k <= max_degree.
class SyzygyModule {
 public:
  /// max_degree < 0 means d - 1.
  explicit SyzygyModule(HomPoly f, int max_degree = -1);

  const HomPoly& poly() const { return f_; }
  int d() const { return f_.degree(); }
  int max_degree() const { return max_degree_; }

  /// Basis of D_0(f)_k; empty for k < 0. Throws for k > max_degree.
  const std::vector<Derivation>& basis(int k) const;
  int dim(int k) const { return static_cast<int>(basis(k).size()); }
  /// Smallest k with D_0(f)_k != 0; throws if none up to max_degree.
  int mdr() const;

  /// Minimal generators chosen degreewise as basis vectors of D_0(f)_k
  /// outside S_1 D_0(f)_{k-1}.
  const std::vector<Derivation>& generators() const { return generators_; }
  std::vector<int> generator_degrees() const;

 private:
  HomPoly f_;
  int max_degree_;
  std::vector<std::vector<Derivation>> pieces_;
  std::vector<Derivation> generators_;
};

struct RelationData {
  std::vector<int> degrees;   // d_{j+2} + epsilon_j, sorted
  std::vector<int> epsilons;  // degrees[j] - d_{j+2}
};

/// Minimal relation degrees among the lifted generators.
RelationData relation_degrees(const SyzygyModule& m);

struct SyzygyProfile {
  std::vector<int> dims;  // k = 0 .. max_degree
  int mdr = 0;
  std::vector<int> gen_degrees;
  std::vector<int> rel_degrees;
  std::vector<int> epsilons;
  std::optional<int> sigma;
  bool free = false;
  std::optional<std::pair<int, int>> exponents;
};

SyzygyProfile syzygy_profile(const SyzygyModule& m);

/// sigma = 2(d-1) - max relation degree. Throws MathError for free curves.
int sigma_from_resolution(const SyzygyModule& m);

/// dim D_0(f)_j for all j: computed values up to max_degree, the
/// combinatorial value tau + 3 C(j+2,2) - C(d+j+1,2) beyond (j >= d-3).
long dim_extended(const SyzygyModule& m, long tau, int j);

/// Hilbert function n(f)_j of the Jacobian module for 0 <= j <= 3d-6.
std::vector<long> n_hilbert(const SyzygyModule& m, long tau);

struct Freeness {
  bool free = false;
  std::optional<std::pair<int, int>> exponents;
};

/// s == 2, cross-checked against the tau criterion (InternalError on
/// disagreement).
Freeness is_free(const Arrangement& a, const SyzygyModule& m);

/// Dimension identities for j in {d-3, d-2, d-1} and their specializations.
Report dims_theorem_check(const Arrangement& a, const SyzygyModule& m);

/// Lower bounds dim D_0(f)_{d-j} >= sum_{m_p >= j} C(m_p - j + 2, 2), j >= 4.
Report lower_bound_check(const Arrangement& a, const SyzygyModule& m);

/// Duality, unimodality, vanishing in degree 2d-4 and initial degree sigma.
Report n_hilbert_check(const Arrangement& a, const SyzygyModule& m);

}  // namespace linarr

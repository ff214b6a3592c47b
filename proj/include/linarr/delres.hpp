#pragma once

// Deletion and restriction with respect to a line L of the arrangement,
// always after moving L to x = 0.

#include <cstddef>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/polyring.hpp"
#include "linarr/report.hpp"

namespace linarr {

struct MovedArrangement {
  Arrangement arrangement;  // same line order, line `line` is x = 0
  Matrix3 M;                // each form l became l^T M
  std::size_t line = 0;
};

MovedArrangement move_line_to_x(const Arrangement& a, std::size_t line);

/// x delta' - (a/d) E for delta' = (a,b,c) in D_0(f/x).
Derivation u0(const Derivation& delta_prime, int d);

/// (b(0,y,z), c(0,y,z)) + a_1(0,y,z)/(d-1) (y,z) for delta = (x a_1, b, c).
/// Throws MathError when the first component is not divisible by x.
BiDerivation v0(const Derivation& delta, int d);

/// Points of A on L = {x = 0} as l_i = beta_i y + gamma_i z, with
/// p_i = (0 : -gamma_i : beta_i) the canonical representative.
struct RestrictionProfile {
  int d = 0;
  std::vector<ProjPoint> points;
  std::vector<FieldScalar> beta, gamma;
  std::vector<int> mults;
  std::vector<HomPoly> forms;  // bivariate

  int k() const { return static_cast<int>(points.size()); }
  /// prod_{s != i} l_s^{m_s - 2}
  HomPoly g(int i) const;
};

/// Profile of an arrangement whose line `line` is x = 0. Asserts
/// f'' = prod l_i^{m_i - 1} and sum (m_i - 1) = d - 1.
RestrictionProfile restriction_profile(const Arrangement& moved, std::size_t line);

/// sum_i (m_i - 1) (prod_{s != i} l_s) (gamma_i d/dy - beta_i d/dz).
BiDerivation delta_dd(const RestrictionProfile& profile);

/// v0(tilde D_{p_i}) proportional to g_i delta'' for every p_i on L.
Report verify_eqG7(const Arrangement& a, std::size_t line);

/// (y,z)^{d-2-k} contained in (g_1, ..., g_k).
Report verify_eqG8(const RestrictionProfile& profile);

/// u0 injective, v0 u0 = 0 and dim ker v0 = dim D_0(f')_{k-1} for k <= k_max
/// (k_max < 0 means d - 2).
Report exactness_check(const Arrangement& a, std::size_t line, int k_max = -1);

/// Images of local derivations under u0 and v0, as exact identities.
Report local_images_check(const Arrangement& a, std::size_t line);

/// Isomorphisms D_0(f')_{k-1} = D_0(f)_k for k <= r-2 and d_s >= r-1 for
/// f = l f', r the number of points of {f' = 0} on L.
Report cor1G_check(const HomPoly& f_prime, const LinearForm& l);

}  // namespace linarr

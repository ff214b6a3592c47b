#pragma once

// Local derivations attached to multiple points, the determinant map
// rho' -> Delta(rho')/f and the span and freeness checks built on them.

#include <cstddef>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/polyring.hpp"
#include "linarr/report.hpp"
#include "linarr/syzygy.hpp"

namespace linarr {

struct LocalDerivation {
  LatticePoint point;
  Derivation deriv;  // degree d - m_p
};

/// f_{2p} (u,v,w) - (D_p(f_{2p}) / d) E for the canonical representative
/// (u:v:w) of p. Throws MathError for a pencil.
LocalDerivation local_derivation(const Arrangement& a, std::size_t p);

/// Multiplies every component by a monomial.
Derivation shifted(const Derivation& delta, const Monomial& m);

/// First basis vector of D_0(f)_{mdr}.
Derivation minimal_syzygy(const SyzygyModule& m);

/// det of the rows (x,y,z), rho, rho2.
HomPoly delta_det(const Derivation& rho, const Derivation& rho2);

/// Delta(tilde D_p)/f, cross-checked against Delta_p / f_{1p}.
HomPoly g_p(const Arrangement& a, const Derivation& rho, std::size_t p);

/// Product of the lines avoiding p and q, times L(p,q) when p and q are not
/// connected in the arrangement.
HomPoly h_p_arrangement(const Arrangement& a, std::size_t q, std::size_t p);

/// Kill property, evaluation at p, vanishing order at other multiple points
/// and the zero set of the evaluated derivation.
Report check_thm1_properties(const Arrangement& a, std::size_t p);

/// D_0(f)_{d-3} is the direct sum of S_{m_p-3} tilde D_p over m_p >= 3.
Report span_thm2(const Arrangement& a, const SyzygyModule& m);

/// Independence of S_{m-2} tilde D_p + S_{m'-2} tilde D_p' + S_{m''-2}
/// tilde D_p'' in D_0(f)_{d-2}. Throws MathError for collinear points.
Report span_thm3(const Arrangement& a, const SyzygyModule& m, std::size_t p0, std::size_t p1, std::size_t p2);

/// D_0(f)_{d-2} = sum_p S_{m_p-2} tilde D_p over all multiple points.
Report span_thmG(const Arrangement& a, const SyzygyModule& m);

/// Divisibility of Delta by f, degree and nonvanishing of g_p in the
/// range 3 <= m_p <= (d+1)/2.
Report bourbaki_check(const Arrangement& a, const SyzygyModule& m);

/// g_p proportional to h_p when rho = tilde D_q, q of maximal
/// multiplicity m > d/2.
Report verify_prop40(const Arrangement& a, const SyzygyModule& m);

/// Exponent trichotomy and the empty-zero-set criterion for freeness.
Report freeness_thm4(const Arrangement& a, const SyzygyModule& m);

/// Tangency of rho to the lines, rho(p) proportional to p and g_p(q) = 0
/// for unconnected pairs.
Report tangency_checks(const Arrangement& a, const Derivation& rho);

/// dim (S/I)_k for the ideal generated by `gens` (0 <= k <= max_degree).
std::vector<long> quotient_hilbert(const FieldPtr& field, const std::vector<HomPoly>& gens, int max_degree);

}  // namespace linarr

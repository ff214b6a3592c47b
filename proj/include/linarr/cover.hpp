#pragma once

// Minimal sets of lines through all multiple points, and the case analysis
// relating them to the first exponent.

#include <cstddef>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/report.hpp"
#include "linarr/syzygy.hpp"

namespace linarr {

struct CoverResult {
  int N = 0;   // any lines of P^2
  int N0 = 0;  // lines of the arrangement only
  std::vector<LinearForm> witness;     // sorted, lexicographically smallest
  std::vector<LinearForm> witness_a;   // sorted, lexicographically smallest
  std::size_t candidates = 0;
};

/// Exact minimum covers by branch and bound over joins of multiple points
/// (a point on no join gets its own line). Witnesses are re-verified by
/// incidence, and small instances are re-solved by subset enumeration.
CoverResult min_cover(const Arrangement& a);

/// Set cover over explicit incidence sets: minimum number of sets and the
/// lexicographically smallest optimal choice of indices.
struct SetCoverResult {
  int size = 0;
  std::vector<std::size_t> chosen;
};
SetCoverResult solve_set_cover(std::size_t npoints, const std::vector<std::vector<std::size_t>>& sets);

/// N <= d_1 + 1. A violation is reported as inconclusive, never as a failure.
Report conjecture_check(const Arrangement& a, const SyzygyModule& m, const CoverResult& c);

/// Multiple points q != p not joined to p by a line of the arrangement.
std::vector<std::size_t> unconnected_set(const Arrangement& a, std::size_t p);

/// Geometry of the unconnected points when m_p <= d_1 + 1 < d - m_p + 1.
Report thm1000_report(const Arrangement& a, const SyzygyModule& m, std::size_t p);

/// Covers inside the arrangement when d_1 = m_p - 1 or d_1 = d - m_p.
Report thm100_check(const Arrangement& a, const SyzygyModule& m, const CoverResult& c);

/// Bezout bounds for unconnected points lying on the line L.
Report rkex10_bounds(const Arrangement& a, std::size_t p, const LinearForm& l);

/// Euler number of the complement computed through the projection from p.
Report lem10_euler(const Arrangement& a, std::size_t p);

/// Tjurina number from the projection from p, for the three positions of a
/// line L containing the unconnected points.
Report tau_case_identity(const Arrangement& a, std::size_t p, const LinearForm& l);

}  // namespace linarr

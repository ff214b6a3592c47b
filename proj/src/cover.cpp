#include "linarr/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "linarr/localder.hpp"

namespace linarr {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }

std::size_t count(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += std::popcount(w);
  return n;
}

std::size_t count_and(const Bits& a, const Bits& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += std::popcount(a[i] & b[i]);
  return n;
}

Bits and_not(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & ~b[i];
  return out;
}

struct Solver {
  std::size_t npoints;
  std::vector<Bits> sets;
  std::vector<std::vector<std::size_t>> containing;  // point -> set indices

  // Can `uncovered` be covered by `budget` sets of index >= from?
  bool feasible(const Bits& uncovered, std::size_t from, int budget) const {
    const std::size_t left = count(uncovered);
    if (left == 0) return true;
    if (budget <= 0) return false;
    std::size_t best_cov = 0;
    for (std::size_t s = from; s < sets.size(); ++s) best_cov = std::max(best_cov, count_and(sets[s], uncovered));
    if (best_cov == 0 || (left + best_cov - 1) / best_cov > static_cast<std::size_t>(budget)) return false;
    // Branch on the uncovered point with the fewest usable sets.
    std::size_t pivot = npoints, fewest = sets.size() + 1;
    for (std::size_t p = 0; p < npoints; ++p) {
      if (!test_bit(uncovered, p)) continue;
      std::size_t n = 0;
      for (auto s : containing[p]) n += s >= from ? 1 : 0;
      if (n == 0) return false;
      if (n < fewest) {
        fewest = n;
        pivot = p;
      }
    }
    std::vector<std::size_t> options;
    for (auto s : containing[pivot])
      if (s >= from) options.push_back(s);
    std::stable_sort(options.begin(), options.end(), [&](std::size_t x, std::size_t y) {
      return count_and(sets[x], uncovered) > count_and(sets[y], uncovered);
    });
    for (auto s : options)
      if (feasible(and_not(uncovered, sets[s]), from, budget - 1)) return true;
    return false;
  }
};

int brute_force_size(std::size_t npoints, const std::vector<Bits>& sets) {
  const std::size_t n = sets.size();
  int best = -1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (best >= 0 && size >= best) continue;
    Bits cov = make_bits(npoints);
    for (std::size_t s = 0; s < n; ++s)
      if (mask >> s & 1)
        for (std::size_t w = 0; w < cov.size(); ++w) cov[w] |= sets[s][w];
    if (count(cov) == npoints) best = size;
  }
  return best;
}

// Some line through p.
LinearForm line_through(const ProjPoint& p) {
  const FieldPtr& field = p.field();
  ProjPoint e = ProjPoint::make(field, 1, 0, 0);
  if (e == p) e = ProjPoint::make(field, 0, 1, 0);
  return join(p, e);
}

std::string forms_text(const std::vector<LinearForm>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i].to_string();
  return s;
}

bool covers(const Arrangement& a, const std::vector<LinearForm>& lines) {
  for (const auto& lp : a.lattice()) {
    bool hit = false;
    for (const auto& l : lines) hit = hit || l.contains(lp.point);
    if (!hit) return false;
  }
  return true;
}

long sum_minus_one(const Arrangement& a, const std::vector<std::size_t>& pts) {
  long s = 0;
  for (auto q : pts) s += a.lattice()[q].multiplicity - 1;
  return s;
}

std::string points_text(const Arrangement& a, const std::vector<std::size_t>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + a.lattice()[pts[i]].point.to_string();
  return s.empty() ? "none" : s;
}

// Distinct points of L on the lines of the arrangement (L itself excluded).
std::vector<ProjPoint> trace_on(const std::vector<LinearForm>& lines, const LinearForm& l) {
  std::vector<ProjPoint> out;
  for (const auto& m : lines) {
    if (m == l) continue;
    ProjPoint q = intersect(l, m);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

}  // namespace

SetCoverResult solve_set_cover(std::size_t npoints, const std::vector<std::vector<std::size_t>>& sets) {
  Solver sv{npoints, {}, std::vector<std::vector<std::size_t>>(npoints)};
  for (std::size_t s = 0; s < sets.size(); ++s) {
    Bits b = make_bits(npoints);
    for (auto p : sets[s]) {
      set_bit(b, p);
      sv.containing[p].push_back(s);
    }
    sv.sets.push_back(std::move(b));
  }
  for (std::size_t p = 0; p < npoints; ++p)
    if (sv.containing[p].empty()) throw MathError("a point lies in no candidate set");
  Bits all = make_bits(npoints);
  for (std::size_t p = 0; p < npoints; ++p) set_bit(all, p);

  SetCoverResult res;
  while (!sv.feasible(all, 0, res.size)) ++res.size;
  Bits left = all;
  std::size_t from = 0;
  for (int budget = res.size; count(left) > 0; --budget) {
    for (std::size_t s = from; s < sets.size(); ++s) {
      if (sv.feasible(and_not(left, sv.sets[s]), s + 1, budget - 1)) {
        res.chosen.push_back(s);
        left = and_not(left, sv.sets[s]);
        from = s + 1;
        break;
      }
    }
  }
  if (static_cast<int>(res.chosen.size()) != res.size) throw InternalError("witness reconstruction failed");
  if (sets.size() <= 20 && brute_force_size(npoints, sv.sets) != res.size)
    throw InternalError("branch and bound disagrees with subset enumeration");
  return res;
}

CoverResult min_cover(const Arrangement& a) {
  const auto& pts = a.lattice();
  std::map<LinearForm, std::vector<std::size_t>> joins;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) joins.emplace(join(pts[i].point, pts[j].point), std::vector<std::size_t>{});
  for (auto& [l, members] : joins)
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (l.contains(pts[i].point)) members.push_back(i);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool on_join = false;
    for (const auto& [l, members] : joins) on_join = on_join || std::find(members.begin(), members.end(), i) != members.end();
    if (!on_join) joins.emplace(line_through(pts[i].point), std::vector<std::size_t>{i});
  }
  std::vector<LinearForm> cand;
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& [l, members] : joins) {
    cand.push_back(l);
    sets.push_back(members);
  }
  CoverResult out;
  out.candidates = cand.size();
  const auto all = solve_set_cover(pts.size(), sets);
  out.N = all.size;
  for (auto s : all.chosen) out.witness.push_back(cand[s]);

  std::vector<LinearForm> lines = a.lines();
  std::sort(lines.begin(), lines.end());
  std::vector<std::vector<std::size_t>> asets;
  for (const auto& l : lines) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (l.contains(pts[i].point)) members.push_back(i);
    asets.push_back(members);
  }
  const auto inside = solve_set_cover(pts.size(), asets);
  out.N0 = inside.size;
  for (auto s : inside.chosen) out.witness_a.push_back(lines[s]);

  if (!covers(a, out.witness) || !covers(a, out.witness_a)) throw InternalError("cover witness misses a point");
  for (const auto& l : out.witness_a)
    if (!a.has_line(l)) throw InternalError("inner cover uses a foreign line");
  if (out.N > out.N0) throw InternalError("N exceeds N0");
  return out;
}

Report conjecture_check(const Arrangement& a, const SyzygyModule& m, const CoverResult& c) {
  Report r("conj10", "");
  const int d1 = m.mdr();
  auto& chk = r.add("conj10", c.N <= d1 + 1 ? Status::pass : Status::inconclusive,
                    c.N <= d1 + 1 ? "N <= d1 + 1" : "potential counterexample: N > d1 + 1");
  chk.fact("N", c.N).fact("N0", c.N0).fact("d1", d1).fact("witness", forms_text(c.witness));
  (void)a;
  return r;
}

std::vector<std::size_t> unconnected_set(const Arrangement& a, std::size_t p) { return a.unconnected_points(p); }

Report thm1000_report(const Arrangement& a, const SyzygyModule& m, std::size_t p) {
  const auto& lp = a.lattice().at(p);
  Report r("thm1000", lp.point.to_string());
  const int d = a.degree();
  const int d1 = m.mdr();
  const int mp = lp.multiplicity;
  if (!(mp <= d1 + 1 && d1 + 1 < d - mp + 1)) {
    r.add("thm1000", Status::hypothesis_not_met, "needs m_p <= d1 + 1 < d - m_p + 1")
        .fact("m_p", mp)
        .fact("d1", d1);
    return r;
  }
  const auto Q = unconnected_set(a, p);
  const HomPoly g = g_p(a, minimal_syzygy(m), p);
  bool on_curve = !g.is_zero();
  for (auto q : Q) {
    const auto& pt = a.lattice()[q].point;
    on_curve = on_curve && g.eval(pt.u, pt.v, pt.w).is_zero();
  }
  r.expect("thm1000.curve", on_curve, "unconnected points on g_p = 0")
      .fact("Q", points_text(a, Q))
      .fact("deg_g_p", g.is_zero() ? -1 : g.degree());

  if (mp == d1 + 1) {
    r.expect("thm1000.1", Q.empty() && a.is_supersolvable(), "p modular, arrangement supersolvable");
  }
  if (mp == d1 && mp == a.max_multiplicity()) {
    bool collinear_q = true;
    for (std::size_t i = 2; i < Q.size(); ++i)
      collinear_q = collinear_q && collinear(a.lattice()[Q[0]].point, a.lattice()[Q[1]].point, a.lattice()[Q[i]].point);
    auto& c = r.expect("thm1000.2-collinear", collinear_q, Q.empty() ? "Q empty, collinearity vacuous" : "");
    if (Q.size() >= 2) c.fact("L", join(a.lattice()[Q[0]].point, a.lattice()[Q[1]].point).to_string());
    const long s = sum_minus_one(a, Q);
    r.expect("thm1000.2-bound", d - 2 * mp <= s,
             "d - 2 m_p = " + std::to_string(d - 2 * mp) + ", sum (m_q - 1) = " + std::to_string(s))
        .fact("sum", s)
        .fact("d_minus_2m", d - 2 * mp);
    const auto degs = m.generator_degrees();
    if (s == d - 2 * mp) {
      r.expect("thm1000.2-free", degs == std::vector<int>{mp, d - mp - 1}, "free with exponents (m_p, d - m_p - 1)");
    } else {
      std::vector<int> want{mp, d - mp, static_cast<int>(mp - 1 + s)};
      std::sort(want.begin(), want.end());
      r.expect("thm1000.2-pog", degs == want, "plus-one generated with d3 = m_p - 1 + sum")
          .fact("d3", mp - 1 + s);
    }
  }
  return r;
}

Report thm100_check(const Arrangement& a, const SyzygyModule& m, const CoverResult& c) {
  Report r("thm100", "");
  const int d = a.degree();
  const int d1 = m.mdr();
  bool hyp = false;
  for (const auto& lp : a.lattice()) hyp = hyp || d1 == lp.multiplicity - 1 || d1 == d - lp.multiplicity;
  int n3 = 0, higher = 0;
  for (const auto& lp : a.lattice()) {
    if (lp.multiplicity == 3) ++n3;
    if (lp.multiplicity > 3) ++higher;
  }
  const bool nodal = n3 == 0 && higher == 0 && d >= 3;
  const bool few_triples = higher == 0 && n3 >= 1 && n3 <= 3 && d >= 4;
  const bool big_point = 2 * a.max_multiplicity() >= d;
  const bool ss = !a.is_pencil() && a.is_supersolvable();
  if (nodal || few_triples || big_point || ss)
    r.expect("thm100.types", hyp, "the listed types satisfy d1 = m - 1 or d1 = d - m");
  if (!hyp) {
    r.add("thm100", Status::hypothesis_not_met, "no point with d1 = m_p - 1 or d1 = d - m_p");
    return r;
  }
  r.expect("thm100", c.N0 <= d1 + 1, "N0 = " + std::to_string(c.N0) + ", d1 + 1 = " + std::to_string(d1 + 1))
      .fact("N0", c.N0)
      .fact("witness", forms_text(c.witness_a));
  if (nodal) r.expect("thm100.1", c.N == d - 1, "N = " + std::to_string(c.N));
  if (few_triples) {
    r.expect("thm100.2-mdr", d1 == d - 3, "d1 = " + std::to_string(d1));
    r.expect("thm100.2-N", c.N == d - 2, "N = " + std::to_string(c.N));
  }
  return r;
}

Report rkex10_bounds(const Arrangement& a, std::size_t p, const LinearForm& l) {
  const auto& lp = a.lattice().at(p);
  Report r("rkex10", lp.point.to_string());
  const auto Q = unconnected_set(a, p);
  for (auto q : Q)
    if (!l.contains(a.lattice()[q].point)) throw MathError("unconnected point off the given line");
  const long d = a.degree();
  const long mp = lp.multiplicity;
  long sum = 0;
  for (auto q : Q) sum += a.lattice()[q].multiplicity;
  if (!a.has_line(l)) {
    r.expect("rkex10.not-in-A", sum <= d - mp, std::to_string(sum) + " <= " + std::to_string(d - mp))
        .fact("sum_m", sum)
        .fact("sharp", sum == d - mp ? "yes" : "no");
  } else {
    const long s1 = sum - static_cast<long>(Q.size());
    r.expect("rkex10.in-A", s1 <= d - mp - 1, std::to_string(s1) + " <= " + std::to_string(d - mp - 1))
        .fact("sum_m_minus_1", s1)
        .fact("sharp", s1 == d - mp - 1 ? "yes" : "no");
  }
  return r;
}

Report lem10_euler(const Arrangement& a, std::size_t p) {
  const auto& lp = a.lattice().at(p);
  Report r("lem10", lp.point.to_string());
  const long d = a.degree();
  const long m = lp.multiplicity;
  if (m != a.max_multiplicity()) {
    r.add("lem10", Status::hypothesis_not_met, "m_p is not the maximal multiplicity");
    return r;
  }
  std::vector<LinearForm> added;
  for (const auto& lq : a.lattice()) {
    if (lq.point == lp.point) continue;
    LinearForm l = join(lp.point, lq.point);
    if (!a.has_line(l) && std::find(added.begin(), added.end(), l) == added.end()) added.push_back(l);
  }
  const long e = static_cast<long>(added.size());
  long correction = 0;
  for (const auto& l : added) correction += 2 - static_cast<long>(trace_on(a.lines(), l).size());
  const long rhs = (m + e - 2) * (d - m - 1) + correction;
  const long lhs = a.euler_complement().by_tau;
  r.expect("lem10.2", lhs == rhs, "E(M(A)) = " + std::to_string(lhs) + ", projection gives " + std::to_string(rhs))
      .fact("e", e)
      .fact("euler", lhs);

  // b: lines through p meeting the other lines in fewer than d - m points.
  std::vector<LinearForm> a2;
  for (const auto& l : a.lines())
    if (!l.contains(lp.point)) a2.push_back(l);
  std::vector<LinearForm> special;
  for (const auto& l : a.lines())
    if (l.contains(lp.point)) special.push_back(l);
  for (const auto& lq : a.lattice()) {
    if (lq.point == lp.point) continue;
    LinearForm l = join(lp.point, lq.point);
    if (std::find(special.begin(), special.end(), l) != special.end()) continue;
    if (static_cast<long>(trace_on(a2, l).size()) < d - m) special.push_back(l);
  }
  r.expect("lem10.1", static_cast<long>(special.size()) == m + e,
           "b = " + std::to_string(special.size()) + ", m + e = " + std::to_string(m + e));
  return r;
}

Report tau_case_identity(const Arrangement& a, std::size_t p, const LinearForm& l) {
  const auto& lp = a.lattice().at(p);
  Report r("tau-cases", lp.point.to_string() + " " + l.to_string());
  const long d = a.degree();
  const long m = lp.multiplicity;
  const long tau = a.tau();
  const auto Q = unconnected_set(a, p);
  for (auto q : Q)
    if (!l.contains(a.lattice()[q].point)) throw MathError("unconnected point off the given line");
  const long base = (d - 1) * (d - 1) - m * (d - m - 1);
  if (!a.has_line(l) && l.contains(lp.point)) {
    std::vector<LinearForm> a2;
    for (const auto& k : a.lines())
      if (!k.contains(lp.point)) a2.push_back(k);
    const long n_l = static_cast<long>(trace_on(a2, l).size());
    long s = 0;
    for (const auto& q : a.lattice())
      if (!(q.point == lp.point) && l.contains(q.point)) s += q.multiplicity - 1;
    r.expect("tau.case2", tau == base - (m - n_l), "tau = " + std::to_string(tau))
        .fact("case", 2)
        .fact("n_L", n_l);
    r.expect("tau.case2-nL", n_l == d - m - s, "n_L = d - m - sum (m_q - 1)");
    return r;
  }
  const long s = sum_minus_one(a, Q);
  const int which = a.has_line(l) ? 3 : 1;
  r.expect("tau.case" + std::to_string(which), tau == base - (s - (d - 2 * m)), "tau = " + std::to_string(tau))
      .fact("case", which)
      .fact("sum", s);
  return r;
}

}  // namespace linarr

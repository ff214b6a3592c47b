#include "linarr/localder.hpp"

#include <algorithm>
#include <random>

#include "linarr/linalg.hpp"

namespace linarr {

namespace {

std::string point_label(const Arrangement& a, std::size_t p) { return a.lattice()[p].point.to_string(); }

bool parallel(const std::vector<FieldScalar>& v, const ProjPoint& p) {
  const FieldScalar* w[3] = {&p.u, &p.v, &p.w};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(v[i] * *w[j] - v[j] * *w[i]).is_zero()) return false;
  return true;
}

// All partial derivatives of order exactly r of g vanish at p.
bool partials_vanish(const HomPoly& g, int r, const ProjPoint& p) {
  if (r > g.degree()) return true;
  for (const auto& mono : monomials(3, r)) {
    HomPoly h = g;
    for (int i = 0; i < mono.a; ++i) h = h.partial(0);
    for (int i = 0; i < mono.b; ++i) h = h.partial(1);
    for (int i = 0; i < mono.c; ++i) h = h.partial(2);
    if (!h.eval(p.u, p.v, p.w).is_zero()) return false;
  }
  return true;
}

// Rank of {mu * tilde D_p : deg mu = k - deg tilde D_p} over the listed points.
std::size_t local_span_rank(const Arrangement& a, const std::vector<std::size_t>& pts, int k, std::size_t* count,
                            Echelon* ech) {
  std::size_t n = 0;
  for (auto p : pts) {
    const auto ld = local_derivation(a, p);
    const int e = k - ld.deriv.degree();
    if (e < 0) continue;
    for (const auto& mono : monomials(3, e)) {
      ech->insert(shifted(ld.deriv, mono).flat());
      ++n;
    }
  }
  if (count) *count = n;
  return ech->rank();
}

long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace

LocalDerivation local_derivation(const Arrangement& a, std::size_t p) {
  const LatticePoint& lp = a.lattice().at(p);
  const auto [f1, f2] = a.split_at(lp);
  const FieldPtr& field = a.field();
  const ProjPoint& pt = lp.point;
  const Derivation dp = Derivation::constant(pt.u, pt.v, pt.w);
  const FieldScalar inv_d(field, Rational(1, a.degree()));
  Derivation tilde = dp * f2 - Derivation::euler(field) * (dp.apply(f2) * inv_d);
  return {lp, std::move(tilde)};
}

Derivation shifted(const Derivation& delta, const Monomial& m) {
  return Derivation(delta.a.shifted(m), delta.b.shifted(m), delta.c.shifted(m));
}

Derivation minimal_syzygy(const SyzygyModule& m) { return m.basis(m.mdr()).front(); }

HomPoly delta_det(const Derivation& rho, const Derivation& rho2) {
  const FieldPtr& field = rho.field();
  const HomPoly x = HomPoly::variable(field, 3, 0);
  const HomPoly y = HomPoly::variable(field, 3, 1);
  const HomPoly z = HomPoly::variable(field, 3, 2);
  return x * (rho.b * rho2.c - rho.c * rho2.b) - y * (rho.a * rho2.c - rho.c * rho2.a) +
         z * (rho.a * rho2.b - rho.b * rho2.a);
}

HomPoly g_p(const Arrangement& a, const Derivation& rho, std::size_t p) {
  const LatticePoint& lp = a.lattice().at(p);
  const auto [f1, f2] = a.split_at(lp);
  const auto ld = local_derivation(a, p);
  HomPoly g = exact_div(delta_det(rho, ld.deriv), a.defining_poly());
  const Derivation dp = Derivation::constant(lp.point.u, lp.point.v, lp.point.w);
  HomPoly g2 = exact_div(delta_det(rho, dp), f1);
  if (!(g == g2)) throw InternalError("the two formulas for g_p disagree at " + lp.point.to_string());
  return g;
}

HomPoly h_p_arrangement(const Arrangement& a, std::size_t q, std::size_t p) {
  if (p == q) throw MathError("h_p needs two distinct points");
  const ProjPoint& pp = a.lattice().at(p).point;
  const ProjPoint& qq = a.lattice().at(q).point;
  std::vector<int> idx;
  for (int i = 0; i < a.degree(); ++i)
    if (!a.lines()[i].contains(pp) && !a.lines()[i].contains(qq)) idx.push_back(i);
  HomPoly h = a.product(idx);
  if (!a.connected(pp, qq)) h = h * join(pp, qq).poly();
  return h;
}

Report check_thm1_properties(const Arrangement& a, std::size_t p) {
  Report r("thm1", point_label(a, p));
  const auto ld = local_derivation(a, p);
  const auto& lp = ld.point;
  const int d = a.degree();
  const FieldPtr& field = a.field();
  const HomPoly f = a.defining_poly();
  const auto [f1, f2] = a.split_at(lp);

  r.expect("thm1.1", Derivation::constant(lp.point.u, lp.point.v, lp.point.w).apply(f1).is_zero(),
           "D_p kills f_1p");
  r.expect("thm1.2", ld.deriv.apply(f).is_zero() && ld.deriv.degree() == d - lp.multiplicity,
           "degree " + std::to_string(ld.deriv.degree()));

  const auto at_p = ld.deriv.eval(lp.point.u, lp.point.v, lp.point.w);
  const FieldScalar factor = f2.eval(lp.point.u, lp.point.v, lp.point.w) * Rational(lp.multiplicity, d);
  bool eval_ok = !factor.is_zero() && at_p[0] == factor * lp.point.u && at_p[1] == factor * lp.point.v &&
                 at_p[2] == factor * lp.point.w;
  r.expect("thm1.3", eval_ok, "value at p is (m_p/d) f_2p(p) p");

  bool order_ok = true;
  std::string bad;
  for (std::size_t q = 0; q < a.lattice().size(); ++q) {
    if (q == p) continue;
    const auto& lq = a.lattice()[q];
    for (int o = 0; o <= lq.multiplicity - 3 && order_ok; ++o)
      for (const HomPoly* c : {&ld.deriv.a, &ld.deriv.b, &ld.deriv.c})
        if (!partials_vanish(*c, o, lq.point)) {
          order_ok = false;
          bad = lq.point.to_string();
        }
  }
  r.expect("thm1.4", order_ok, bad.empty() ? "" : "order too low at " + bad);

  // Zero set of the evaluated derivation: exactly the multiple points of A_2.
  std::vector<LinearForm> a2;
  for (const auto& l : a.lines())
    if (!l.contains(lp.point)) a2.push_back(l);
  auto a2_mult = [&](const ProjPoint& q) {
    int n = 0;
    for (const auto& l : a2) n += l.contains(q) ? 1 : 0;
    return n;
  };
  auto vanishes = [&](const ProjPoint& q) {
    auto v = ld.deriv.eval(q.u, q.v, q.w);
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
  };
  bool zero_ok = true;
  std::string zbad;
  for (const auto& lq : a.lattice()) {
    if (lq.point == lp.point) continue;
    if (vanishes(lq.point) != (a2_mult(lq.point) >= 2)) {
      zero_ok = false;
      zbad = lq.point.to_string();
    }
  }
  std::mt19937_64 rng(0x5eed + p);
  std::uniform_int_distribution<long> coeff(-7, 7);
  int sampled = 0;
  for (const auto& l : a2) {
    for (int t = 0; t < 2; ++t) {
      const long c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng);
      if (c0 == 0 && c1 == 0 && c2 == 0) continue;
      LinearForm other = LinearForm::make(field, c0, c1, c2);
      if (other == l) continue;
      ProjPoint q = intersect(l, other);
      if (a2_mult(q) >= 2) continue;
      ++sampled;
      if (vanishes(q)) {
        zero_ok = false;
        zbad = q.to_string();
      }
    }
  }
  r.expect("thm1.5", zero_ok, zbad.empty() ? "" : "unexpected behaviour at " + zbad).fact("sampled", sampled);
  return r;
}

Report span_thm2(const Arrangement& a, const SyzygyModule& m) {
  Report r("thm2", "");
  const int k = m.d() - 3;
  if (k < 0) {
    r.add("thm2", Status::hypothesis_not_met, "d < 3");
    return r;
  }
  std::vector<std::size_t> pts;
  long expected = 0;
  for (std::size_t p = 0; p < a.lattice().size(); ++p)
    if (a.lattice()[p].multiplicity >= 3) {
      pts.push_back(p);
      expected += binom2(a.lattice()[p].multiplicity - 1);
    }
  Echelon ech(a.field(), 3 * num_monomials(3, k));
  std::size_t count = 0;
  const std::size_t rank = local_span_rank(a, pts, k, &count, &ech);
  const long dim = m.dim(k);
  r.expect("thm2.independent", rank == count, std::to_string(rank) + " of " + std::to_string(count));
  r.expect("thm2.spans", static_cast<long>(rank) == dim && static_cast<long>(count) == expected,
           "rank " + std::to_string(rank) + ", dim " + std::to_string(dim))
      .fact("dim", dim)
      .fact("rank", static_cast<long>(rank));
  for (const auto& b : m.basis(k)) ech.insert(b.flat());
  r.expect("thm2.inside", static_cast<long>(ech.rank()) == dim);
  return r;
}

Report span_thm3(const Arrangement& a, const SyzygyModule& m, std::size_t p0, std::size_t p1, std::size_t p2) {
  Report r("thm3", "");
  const auto& L = a.lattice();
  const ProjPoint &x = L.at(p0).point, &y = L.at(p1).point, &z = L.at(p2).point;
  if (collinear(x, y, z)) throw MathError("the three points are collinear");
  int in_a = a.connected(x, y) + a.connected(y, z) + a.connected(x, z);
  bool mult_ok = L[p0].multiplicity >= 3 && L[p1].multiplicity >= 3 && L[p2].multiplicity >= 3;
  if (in_a == 3 || !mult_ok) {
    r.add("thm3", Status::hypothesis_not_met,
          !mult_ok ? "a point has multiplicity < 3" : "all three connecting lines are in the arrangement")
        .fact("lines_in_A", in_a);
    return r;
  }
  const int k = m.d() - 2;
  Echelon ech(a.field(), 3 * num_monomials(3, k));
  std::size_t count = 0;
  const std::size_t rank = local_span_rank(a, {p0, p1, p2}, k, &count, &ech);
  r.expect("thm3", rank == count, "rank " + std::to_string(rank) + " of " + std::to_string(count))
      .fact("lines_in_A", in_a)
      .fact("rank", static_cast<long>(rank));
  return r;
}

Report span_thmG(const Arrangement& a, const SyzygyModule& m) {
  Report r("thmG-span", "");
  if (a.is_pencil()) {
    r.add("thmG", Status::hypothesis_not_met, "pencil");
    return r;
  }
  const int k = m.d() - 2;
  std::vector<std::size_t> pts(a.lattice().size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = i;
  Echelon ech(a.field(), 3 * num_monomials(3, k));
  const std::size_t rank = local_span_rank(a, pts, k, nullptr, &ech);
  const long dim = m.dim(k);
  r.expect("thmG", static_cast<long>(rank) == dim, "span " + std::to_string(rank) + ", dim " + std::to_string(dim))
      .fact("dim", dim);
  return r;
}

Report bourbaki_check(const Arrangement& a, const SyzygyModule& m) {
  Report r("bourbaki", "");
  const Derivation rho = minimal_syzygy(m);
  const HomPoly f = a.defining_poly();
  const int d = a.degree();
  const int d1 = m.mdr();
  bool divisible = true;
  for (const auto& g : m.generators()) {
    try {
      exact_div(delta_det(rho, g), f);
    } catch (const MathError&) {
      divisible = false;
    }
  }
  r.expect("delta.divisible", divisible, "Delta(rho') divisible by f for every generator");
  bool deg_ok = true, prop4 = true;
  for (std::size_t p = 0; p < a.lattice().size(); ++p) {
    const int mp = a.lattice()[p].multiplicity;
    const HomPoly g = g_p(a, rho, p);
    if (!g.is_zero() && g.degree() != d1 + 1 - mp) deg_ok = false;
    if (mp >= 3 && 2 * mp <= d + 1) {
      const auto ld = local_derivation(a, p);
      bool multiple = ld.deriv.degree() == rho.degree() && proportional(ld.deriv.flat(), rho.flat());
      if (!multiple && g.is_zero()) prop4 = false;
    }
  }
  r.expect("g_p.degree", deg_ok);
  r.expect("prop4", prop4, "g_p != 0 when tilde D_p is not a multiple of rho");
  return r;
}

Report verify_prop40(const Arrangement& a, const SyzygyModule& m) {
  Report r("prop40", "");
  const int d = a.degree();
  const int mmax = a.max_multiplicity();
  if (2 * mmax <= d) {
    r.add("prop40", Status::hypothesis_not_met, "m <= d/2");
    return r;
  }
  std::size_t q = 0;
  while (a.lattice()[q].multiplicity != mmax) ++q;
  const auto rho = local_derivation(a, q).deriv;
  r.expect("prop40.minimal", rho.degree() == m.mdr(), "tilde D_q has degree " + std::to_string(rho.degree()));
  for (std::size_t p = 0; p < a.lattice().size(); ++p) {
    if (p == q) continue;
    const HomPoly g = g_p(a, rho, p);
    const HomPoly h = h_p_arrangement(a, q, p);
    const bool conn = a.connected(a.lattice()[p].point, a.lattice()[q].point);
    r.expect("prop40." + a.lattice()[p].point.to_string(), !g.is_zero() && proportional(g, h),
             conn ? "connected" : "not connected")
        .fact("g_p", g.to_string())
        .fact("h_p", h.to_string())
        .fact("connected", conn ? "yes" : "no");
  }
  return r;
}

std::vector<long> quotient_hilbert(const FieldPtr& field, const std::vector<HomPoly>& gens, int max_degree) {
  std::vector<long> out;
  for (int k = 0; k <= max_degree; ++k) {
    if (!out.empty() && out.back() == 0) {
      out.push_back(0);
      continue;
    }
    Echelon ech(field, num_monomials(3, k));
    for (const auto& g : gens) {
      if (g.degree() > k) continue;
      for (const auto& mono : monomials(3, k - g.degree())) {
        SparseVector v;
        for (const auto& [key, c] : g.terms()) {
          Monomial t = HomPoly::unpack(key);
          v.emplace_back(monomial_index(3, {t.a + mono.a, t.b + mono.b, t.c + mono.c}), c);
        }
        ech.insert(v);
        if (ech.rank() == ech.ncols()) break;
      }
      if (ech.rank() == ech.ncols()) break;
    }
    out.push_back(static_cast<long>(num_monomials(3, k) - ech.rank()));
  }
  return out;
}

Report freeness_thm4(const Arrangement& a, const SyzygyModule& m) {
  Report r("thm4", "");
  const long d = a.degree();
  const long mm = a.max_multiplicity();
  const long d1 = m.mdr();
  const long tau = a.tau();
  const Freeness fr = is_free(a, m);

  if (2 * mm > d) {
    r.expect("thm4.1-mdr", d1 == d - mm, "d1 = " + std::to_string(d1) + ", d - m = " + std::to_string(d - mm));
    r.expect("thm4.1-tau", fr.free == (tau == (d - 1) * (d - 1) - (d - mm) * (mm - 1)));
  } else {
    bool modular_case = d1 == mm - 1 && fr.free && fr.exponents &&
                        fr.exponents->first == mm - 1 && fr.exponents->second == d - mm;
    r.expect("thm4.2", modular_case || (mm <= d1 && d1 <= d - mm),
             "m = " + std::to_string(mm) + ", d1 = " + std::to_string(d1));
  }

  if (mm < 2 || mm > d - 2) {
    r.add("thm4.3", Status::hypothesis_not_met, "needs 2 <= m <= d-2");
    return r;
  }
  const Derivation rho = minimal_syzygy(m);
  std::vector<HomPoly> gens;
  int dmax = 0;
  for (std::size_t p = 0; p < a.lattice().size(); ++p) {
    const int mp = a.lattice()[p].multiplicity;
    if (mp < 3 || 2 * mp > d + 1) continue;
    HomPoly g = g_p(a, rho, p);
    if (g.is_zero()) continue;
    dmax = std::max(dmax, g.degree());
    gens.push_back(std::move(g));
  }
  bool empty = false;
  std::string certificate = "no generators";
  int cap = 0;
  if (!gens.empty()) {
    // An ideal generated in degrees <= D with no zeros in P^2 contains S_k
    // for k >= 3D - 2.
    cap = static_cast<int>(std::max<long>(2L * dmax + d, 3L * dmax - 2));
    const auto hf = quotient_hilbert(a.field(), gens, cap);
    auto zero = std::find(hf.begin(), hf.end(), 0L);
    empty = zero != hf.end();
    certificate = empty ? "(S/I)_" + std::to_string(zero - hf.begin()) + " = 0"
                        : "(S/I)_" + std::to_string(cap) + " = " + std::to_string(hf.back()) + " > 0";
  }
  if (empty != fr.free)
    throw InternalError("empty-zero-set criterion disagrees with the generator count on freeness");
  r.expect("thm4.3", true, empty ? "zero set empty, free" : "zero set nonempty, not free")
      .fact("generators", static_cast<long>(gens.size()))
      .fact("max_degree", dmax)
      .fact("certificate", certificate);
  return r;
}

Report tangency_checks(const Arrangement& a, const Derivation& rho) {
  Report r("propthm10", "");
  bool tangent = true;
  for (const auto& l : a.lines()) {
    HomPoly s = rho.a * l.alpha + rho.b * l.beta + rho.c * l.gamma;
    try {
      exact_div(s, l.poly());
    } catch (const MathError&) {
      tangent = false;
    }
  }
  r.expect("propthm10.1", tangent, "alpha a + beta b + gamma c divisible by each line");
  bool radial = true;
  for (const auto& lp : a.lattice())
    if (!parallel(rho.eval(lp.point.u, lp.point.v, lp.point.w), lp.point)) radial = false;
  r.expect("propthm10.2", radial, "rho(p) is zero or a multiple of p");

  bool vanish = true;
  long pairs = 0;
  for (std::size_t p = 0; p < a.lattice().size(); ++p) {
    const auto unconnected = a.unconnected_points(p);
    if (unconnected.empty()) continue;
    const HomPoly g = g_p(a, rho, p);
    for (auto q : unconnected) {
      ++pairs;
      const auto& pt = a.lattice()[q].point;
      if (!g.eval(pt.u, pt.v, pt.w).is_zero()) vanish = false;
    }
  }
  r.expect("propthm10.3", vanish, "g_p(q) = 0 for unconnected pairs").fact("pairs", pairs);
  return r;
}

}  // namespace linarr

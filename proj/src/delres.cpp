#include "linarr/delres.hpp"

#include <algorithm>

#include "linarr/linalg.hpp"
#include "linarr/localder.hpp"
#include "linarr/syzygy.hpp"

namespace linarr {

namespace {

// M with (alpha, beta, gamma)^T M = (1, 0, 0).
Matrix3 line_to_x_matrix(const LinearForm& l) {
  const FieldPtr& field = l.field();
  const FieldScalar c[3] = {l.alpha, l.beta, l.gamma};
  int lead = 0;
  while (c[lead].is_zero()) ++lead;
  Matrix3 n = Matrix3::identity(field);
  for (int j = 0; j < 3; ++j) n(0, j) = c[j];
  // Rows 1 and 2 are the unit vectors e_j for j != lead.
  int row = 1;
  for (int j = 0; j < 3; ++j) {
    if (j == lead) continue;
    for (int t = 0; t < 3; ++t) n(row, t) = FieldScalar(field, t == j ? 1L : 0L);
    ++row;
  }
  return n.inverse();
}

HomPoly product_except(const Arrangement& a, std::size_t line) {
  std::vector<int> idx;
  for (int i = 0; i < a.degree(); ++i)
    if (static_cast<std::size_t>(i) != line) idx.push_back(i);
  return a.product(idx);
}

bool bi_zero(const BiDerivation& b) { return b.is_zero(); }

std::string list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "none" : s;
}

}  // namespace

MovedArrangement move_line_to_x(const Arrangement& a, std::size_t line) {
  const Matrix3 M = line_to_x_matrix(a.lines().at(line));
  Arrangement moved = a.substituted(M);
  if (!(moved.lines()[line] == LinearForm::make(a.field(), 1, 0, 0)))
    throw InternalError("line was not moved to x = 0");
  return {std::move(moved), M, line};
}

Derivation u0(const Derivation& delta_prime, int d) {
  const FieldPtr& field = delta_prime.field();
  const HomPoly x = HomPoly::variable(field, 3, 0);
  const FieldScalar inv_d(field, Rational(1, d));
  return delta_prime * x - Derivation::euler(field) * (delta_prime.a * inv_d);
}

BiDerivation v0(const Derivation& delta, int d) {
  const FieldPtr& field = delta.field();
  HomPoly b = delta.b.restrict_x0();
  HomPoly c = delta.c.restrict_x0();
  if (delta.a.is_zero()) return BiDerivation(b, c);
  HomPoly a1(field, 3, 0);
  try {
    a1 = exact_div(delta.a, HomPoly::variable(field, 3, 0));
  } catch (const MathError&) {
    throw MathError("input is not a syzygy: first component not divisible by x");
  }
  const HomPoly abar = a1.restrict_x0() * FieldScalar(field, Rational(1, d - 1));
  b += abar * HomPoly::variable(field, 2, 1);
  c += abar * HomPoly::variable(field, 2, 2);
  return BiDerivation(b, c);
}

HomPoly RestrictionProfile::g(int i) const {
  const FieldPtr& field = forms.front().field();
  HomPoly out = HomPoly::constant(FieldScalar(field, 1L), 2);
  for (int s = 0; s < k(); ++s)
    if (s != i) out = out * forms[s].pow(static_cast<unsigned>(mults[s] - 2));
  return out;
}

RestrictionProfile restriction_profile(const Arrangement& moved, std::size_t line) {
  if (moved.is_pencil()) throw MathError("restriction of a pencil");
  const LinearForm& l = moved.lines().at(line);
  if (!(l == LinearForm::make(moved.field(), 1, 0, 0))) throw MathError("line is not x = 0");
  RestrictionProfile pr;
  pr.d = moved.degree();
  const FieldPtr& field = moved.field();
  for (const auto& lp : moved.lattice()) {
    if (!l.contains(lp.point)) continue;
    pr.points.push_back(lp.point);
    pr.gamma.push_back(-lp.point.v);
    pr.beta.push_back(lp.point.w);
    pr.mults.push_back(lp.multiplicity);
    pr.forms.push_back(HomPoly::linear(FieldScalar(field), lp.point.w, -lp.point.v).restrict_x0());
  }
  int sum = 0;
  for (int m : pr.mults) sum += m - 1;
  if (sum != pr.d - 1) throw InternalError("restriction multiplicities do not add up to d - 1");
  HomPoly prod = HomPoly::constant(FieldScalar(field, 1L), 2);
  for (int i = 0; i < pr.k(); ++i) prod = prod * pr.forms[i].pow(static_cast<unsigned>(pr.mults[i] - 1));
  if (!proportional(prod, product_except(moved, line).restrict_x0()))
    throw InternalError("restriction of f' is not the product of the point forms");
  return pr;
}

BiDerivation delta_dd(const RestrictionProfile& pr) {
  const FieldPtr& field = pr.forms.front().field();
  const int deg = pr.k() - 1;
  BiDerivation out(HomPoly(field, 2, deg), HomPoly(field, 2, deg));
  for (int i = 0; i < pr.k(); ++i) {
    HomPoly prod = HomPoly::constant(FieldScalar(field, static_cast<long>(pr.mults[i] - 1)), 2);
    for (int s = 0; s < pr.k(); ++s)
      if (s != i) prod = prod * pr.forms[s];
    out.b += prod * pr.gamma[i];
    out.c -= prod * pr.beta[i];
  }
  return out;
}

Report verify_eqG7(const Arrangement& a, std::size_t line) {
  Report r("eqG7", a.lines().at(line).to_string());
  const auto mv = move_line_to_x(a, line);
  const auto pr = restriction_profile(mv.arrangement, line);
  const BiDerivation dd = delta_dd(pr);
  const HomPoly fpp = product_except(mv.arrangement, line).restrict_x0();
  r.expect("delta''.kills", dd.apply(fpp).is_zero() && dd.degree() == pr.k() - 1,
           "degree " + std::to_string(dd.degree()));
  for (int i = 0; i < pr.k(); ++i) {
    const auto idx = *mv.arrangement.find_point(pr.points[i]);
    const BiDerivation img = v0(local_derivation(mv.arrangement, idx).deriv, pr.d);
    const BiDerivation rhs = dd * pr.g(i);
    r.expect("eqG7." + pr.points[i].to_string(), !img.is_zero() && proportional(img.flat(), rhs.flat()))
        .fact("g_i_degree", pr.g(i).degree());
  }
  r.merge(verify_eqG8(pr));
  return r;
}

Report verify_eqG8(const RestrictionProfile& pr) {
  Report r("eqG8", "");
  const int n = pr.d - 2 - pr.k();
  if (n < 0) {
    r.expect("eqG8", true, "d - 2 - k < 0, vacuous");
    return r;
  }
  const FieldPtr& field = pr.forms.front().field();
  Echelon ech(field, n + 1);
  for (int i = 0; i < pr.k(); ++i) {
    const HomPoly gi = pr.g(i);
    if (gi.degree() > n) continue;
    for (const auto& mono : monomials(2, n - gi.degree())) ech.insert(gi.shifted(mono).coeffs());
  }
  r.expect("eqG8", static_cast<int>(ech.rank()) == n + 1,
           "rank " + std::to_string(ech.rank()) + " of " + std::to_string(n + 1));
  return r;
}

Report exactness_check(const Arrangement& a, std::size_t line, int k_max) {
  Report r("thm1G-exact", a.lines().at(line).to_string());
  const auto mv = move_line_to_x(a, line);
  const Arrangement& b = mv.arrangement;
  const int d = b.degree();
  if (k_max < 0) k_max = d - 2;
  const FieldPtr& field = b.field();
  const HomPoly f = b.defining_poly();
  const HomPoly fp = product_except(b, line);
  const HomPoly fpp = fp.restrict_x0();
  const SyzygyModule mf(f, k_max);
  const SyzygyModule mfp(fp, std::max(k_max - 1, 0));
  std::vector<int> not_injective, not_complex, bad_kernel, not_syzygy;
  for (int k = 0; k <= k_max; ++k) {
    const auto& prime = mfp.basis(k - 1);
    std::vector<Vector> images;
    for (const auto& dp : prime) {
      const Derivation im = u0(dp, d);
      if (!im.apply(f).is_zero()) not_syzygy.push_back(k);
      if (!bi_zero(v0(im, d))) not_complex.push_back(k);
      images.push_back(im.flat());
    }
    if (rank_of(field, 3 * num_monomials(3, k), images) != prime.size()) not_injective.push_back(k);
    std::vector<Vector> vimages;
    for (const auto& delta : mf.basis(k)) {
      const BiDerivation im = v0(delta, d);
      if (!im.apply(fpp).is_zero()) not_syzygy.push_back(k);
      vimages.push_back(im.flat());
    }
    const std::size_t rk = rank_of(field, 2 * num_monomials(2, k), vimages);
    if (mf.basis(k).size() - rk != prime.size()) bad_kernel.push_back(k);
  }
  r.expect("u0.injective", not_injective.empty(), "failing degrees " + list(not_injective));
  r.expect("v0u0.zero", not_complex.empty(), "failing degrees " + list(not_complex));
  r.expect("kernel.dim", bad_kernel.empty(), "failing degrees " + list(bad_kernel)).fact("k_max", k_max);
  r.expect("images.syzygies", not_syzygy.empty(), "failing degrees " + list(not_syzygy));
  return r;
}

Report local_images_check(const Arrangement& a, std::size_t line) {
  Report r("propG", a.lines().at(line).to_string());
  const auto mv = move_line_to_x(a, line);
  const Arrangement& b = mv.arrangement;
  const int d = b.degree();
  const FieldPtr& field = b.field();
  const LinearForm& l = b.lines()[line];
  const HomPoly x = HomPoly::variable(field, 3, 0);
  const Arrangement bp = b.deleted(line);

  bool g1 = true, g2a = true, g2b = true;
  int tested_g1 = 0;
  for (std::size_t q = 0; q < bp.lattice().size(); ++q) {
    const auto& lp = bp.lattice()[q];
    if (lp.multiplicity >= bp.degree()) continue;
    const auto idx = b.find_point(lp.point);
    if (!idx) throw InternalError("multiple point of the deletion missing from the arrangement");
    const Derivation lhs = u0(local_derivation(bp, q).deriv, d);
    const Derivation td = local_derivation(b, *idx).deriv;
    const Derivation rhs = l.contains(lp.point) ? td * x : td;
    ++tested_g1;
    if (!(lhs == rhs)) g1 = false;
  }
  r.expect("propG1", g1).fact("points", tested_g1);

  for (std::size_t p = 0; p < b.lattice().size(); ++p) {
    const auto& lp = b.lattice()[p];
    const BiDerivation img = v0(local_derivation(b, p).deriv, d);
    if (!l.contains(lp.point)) {
      if (!img.is_zero()) g2b = false;
      continue;
    }
    const FieldScalar gamma = -lp.point.v, beta = lp.point.w;
    const HomPoly f2bar = b.split_at(lp).second.restrict_x0();
    const HomPoly ap = f2bar.partial(1) * gamma - f2bar.partial(2) * beta;
    const HomPoly y = HomPoly::variable(field, 2, 1), z = HomPoly::variable(field, 2, 2);
    const FieldScalar dm1(field, static_cast<long>(d - 1));
    const FieldScalar inv(field, Rational(1, d - 1));
    BiDerivation expected((y * ap - f2bar * (dm1 * gamma)) * inv, (z * ap + f2bar * (dm1 * beta)) * inv);
    if (!(img == expected)) g2a = false;
  }
  r.expect("propG2.1", g2a, "exact formula with the 1/(d-1) factor");
  r.expect("propG2.2", g2b, "v0 vanishes off L");
  return r;
}

Report cor1G_check(const HomPoly& f_prime, const LinearForm& l) {
  Report r("cor1G", l.to_string());
  const Matrix3 M = line_to_x_matrix(l);
  const HomPoly fp = substitute_linear(f_prime, M);
  const HomPoly fpp = fp.restrict_x0();
  if (fpp.is_zero()) throw MathError("the line is a component of the curve");
  const int rr = binary_distinct_roots(fpp);
  const HomPoly f = HomPoly::variable(fp.field(), 3, 0) * fp;
  const int d = f.degree();
  const int top = std::max(d - 1, rr - 1);
  std::vector<int> bad;
  SyzygyModule mf(f, top);
  if (rr - 2 >= 0 && fp.degree() >= 2) {
    const SyzygyModule mfp(fp, std::max(rr - 3, 0));
    for (int k = 0; k <= rr - 2; ++k)
      if (mf.dim(k) != mfp.dim(k - 1)) bad.push_back(k);
  }
  r.expect("cor1G.1", bad.empty(), "failing degrees " + list(bad)).fact("r", rr);
  auto degs = mf.generator_degrees();
  if (degs.empty() || degs.back() < rr - 1) {
    mf = SyzygyModule(f, std::max(top, 2 * d - 4));
    degs = mf.generator_degrees();
  }
  const int ds = degs.empty() ? -1 : degs.back();
  r.expect("cor1G.2", ds >= rr - 1, "d_s = " + std::to_string(ds) + ", r - 1 = " + std::to_string(rr - 1))
      .fact("d_s", ds);
  return r;
}

}  // namespace linarr

#include "linarr/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "linarr/detail/unipoly.hpp"

namespace linarr {


std::vector<Monomial> monomials(int nvars, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  if (nvars == 2) {
    for (int b = k; b >= 0; --b) out.push_back({0, b, k - b});
    return out;
  }
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
  return out;
}

std::size_t monomial_index(int nvars, const Monomial& m) {
  if (nvars == 2) return static_cast<std::size_t>(m.c);
  const int k = m.degree();
  return static_cast<std::size_t>((k - m.a) * (k - m.a + 1) / 2 + (k - m.a - m.b));
}

std::size_t num_monomials(int nvars, int k) {
  if (k < 0) return 0;
  if (nvars == 2) return static_cast<std::size_t>(k + 1);
  return static_cast<std::size_t>((k + 1) * (k + 2) / 2);
}

HomPoly::HomPoly(FieldPtr field, int nvars, int degree) : field_(std::move(field)), nvars_(nvars), degree_(degree) {
  if (nvars != 2 && nvars != 3) throw MathError("polynomials have 2 or 3 variables");
  if (degree < 0) throw MathError("negative degree");
}

HomPoly HomPoly::constant(const FieldScalar& c, int nvars) {
  HomPoly p(c.field(), nvars, 0);
  p.add_term({0, 0, 0}, c);
  return p;
}

HomPoly HomPoly::variable(const FieldPtr& field, int nvars, int var) {
  if (nvars == 2 && var == 0) throw MathError("x is not a variable of K[y,z]");
  Monomial m{var == 0 ? 1 : 0, var == 1 ? 1 : 0, var == 2 ? 1 : 0};
  return term(FieldScalar(field, Rational(1)), nvars, m);
}

HomPoly HomPoly::term(const FieldScalar& c, int nvars, const Monomial& m) {
  HomPoly p(c.field(), nvars, m.degree());
  p.add_term(m, c);
  return p;
}

HomPoly HomPoly::linear(const FieldScalar& alpha, const FieldScalar& beta, const FieldScalar& gamma) {
  HomPoly p(alpha.field(), 3, 1);
  p.add_term({1, 0, 0}, alpha);
  p.add_term({0, 1, 0}, beta);
  p.add_term({0, 0, 1}, gamma);
  return p;
}

HomPoly HomPoly::from_coeffs(const FieldPtr& field, int nvars, int degree, const std::vector<FieldScalar>& coeffs) {
  auto mons = monomials(nvars, degree);
  if (coeffs.size() != mons.size()) throw MathError("coefficient vector length mismatch");
  HomPoly p(field, nvars, degree);
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (!coeffs[i].is_zero()) p.terms_.emplace(pack(mons[i]), coeffs[i]);
  return p;
}

FieldScalar HomPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(pack(m));
  return it == terms_.end() ? FieldScalar(field_) : it->second;
}

void HomPoly::add_term(const Monomial& m, const FieldScalar& c) {
  if (m.degree() != degree_) throw MathError("term degree mismatch");
  if (nvars_ == 2 && m.a != 0) throw MathError("x in a bivariate polynomial");
  if (!same_field(c.field(), field_)) throw MathError("field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(pack(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<FieldScalar> HomPoly::coeffs() const {
  std::vector<FieldScalar> out(num_monomials(nvars_, degree_), FieldScalar(field_));
  for (const auto& [k, c] : terms_) out[monomial_index(nvars_, unpack(k))] = c;
  return out;
}

Monomial HomPoly::leading_monomial() const {
  if (terms_.empty()) throw MathError("zero polynomial has no leading term");
  return unpack(terms_.begin()->first);
}

const FieldScalar& HomPoly::leading_coeff() const {
  if (terms_.empty()) throw MathError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void HomPoly::check_compatible(const HomPoly& other) const {
  if (!same_field(field_, other.field_)) throw MathError("field mismatch");
  if (nvars_ != other.nvars_) throw MathError("variable mismatch");
}

HomPoly HomPoly::operator-() const {
  HomPoly r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

HomPoly& HomPoly::operator+=(const HomPoly& rhs) {
  check_compatible(rhs);
  if (degree_ != rhs.degree_) throw MathError("degree mismatch in sum");
  for (const auto& [k, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& rhs) { return *this += -rhs; }

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  a.check_compatible(b);
  HomPoly r(a.field_, a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      FieldScalar c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(ka + kb, c);
      if (!inserted) it->second += c;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second.is_zero())
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

HomPoly HomPoly::operator*(const FieldScalar& c) const {
  HomPoly r(field_, nvars_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, v * c);
  return r;
}

HomPoly HomPoly::operator*(const Rational& c) const { return *this * FieldScalar(field_, c); }

HomPoly HomPoly::pow(unsigned e) const {
  HomPoly r = constant(FieldScalar(field_, Rational(1)), nvars_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

HomPoly HomPoly::partial(int var) const {
  HomPoly r(field_, nvars_, degree_ > 0 ? degree_ - 1 : 0);
  if (degree_ == 0) return r;
  for (const auto& [k, c] : terms_) {
    Monomial m = unpack(k);
    int e = var == 0 ? m.a : (var == 1 ? m.b : m.c);
    if (e == 0) continue;
    Monomial d = m;
    (var == 0 ? d.a : (var == 1 ? d.b : d.c)) -= 1;
    r.terms_.emplace(pack(d), c * Rational(e));
  }
  return r;
}

FieldScalar HomPoly::eval(const FieldScalar& u, const FieldScalar& v, const FieldScalar& w) const {
  FieldScalar sum(field_);
  std::vector<FieldScalar> pu{FieldScalar(field_, Rational(1))}, pv = pu, pw = pu;
  for (int i = 1; i <= degree_; ++i) {
    pu.push_back(pu.back() * u);
    pv.push_back(pv.back() * v);
    pw.push_back(pw.back() * w);
  }
  for (const auto& [k, c] : terms_) {
    Monomial m = unpack(k);
    sum += c * pu[m.a] * pv[m.b] * pw[m.c];
  }
  return sum;
}

HomPoly HomPoly::restrict_x0() const {
  HomPoly r(field_, 2, degree_);
  for (const auto& [k, c] : terms_)
    if (unpack(k).a == 0) r.terms_.emplace(k, c);
  return r;
}

HomPoly HomPoly::lift3() const {
  HomPoly r(field_, 3, degree_);
  r.terms_ = terms_;
  return r;
}

HomPoly HomPoly::shifted(const Monomial& m) const {
  if (nvars_ == 2 && m.a != 0) throw MathError("x in a bivariate polynomial");
  HomPoly r(field_, nvars_, degree_ + m.degree());
  const Key s = pack(m);
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + s, c);
  return r;
}

bool HomPoly::operator==(const HomPoly& other) const {
  return same_field(field_, other.field_) && nvars_ == other.nvars_ && degree_ == other.degree_ &&
         terms_ == other.terms_;
}

std::string HomPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Monomial m = unpack(k);
    std::string mono;
    auto put = [&mono](char v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    put('x', m.a);
    put('y', m.b);
    put('z', m.c);
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.constant_term();
      negative = sgn(q) < 0;
      Rational mag = abs(q);
      if (mag != 1 || mono.empty()) coef = mag.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    os << coef;
    if (!coef.empty() && !mono.empty()) os << "*";
    os << mono;
    first = false;
  }
  return os.str();
}

HomPoly exact_div(const HomPoly& p, const HomPoly& q) {
  if (q.is_zero()) throw MathError("division by zero");
  if (!same_field(p.field(), q.field()) || p.nvars() != q.nvars()) throw MathError("variable mismatch");
  if (p.degree() < q.degree()) {
    if (p.is_zero()) return HomPoly(p.field(), p.nvars(), 0);
    throw MathError("not divisible");
  }
  HomPoly quot(p.field(), p.nvars(), p.degree() - q.degree());
  HomPoly r = p;
  const Monomial lq = q.leading_monomial();
  const FieldScalar inv = q.leading_coeff().inverse();
  while (!r.is_zero()) {
    Monomial lr = r.leading_monomial();
    if (lr.a < lq.a || lr.b < lq.b || lr.c < lq.c) throw MathError("not divisible");
    Monomial t{lr.a - lq.a, lr.b - lq.b, lr.c - lq.c};
    FieldScalar c = r.leading_coeff() * inv;
    quot.add_term(t, c);
    r -= q.shifted(t) * c;
  }
  if (!(quot * q == p)) throw InternalError("exact division failed re-multiplication check");
  return quot;
}

Matrix3 Matrix3::identity(const FieldPtr& field) {
  Matrix3 m;
  for (int i = 0; i < 9; ++i) m.e.emplace_back(field, Rational(i % 4 == 0 ? 1 : 0));
  return m;
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldScalar s(field());
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
      r.e.push_back(s);
    }
  return r;
}

FieldScalar Matrix3::det() const {
  const Matrix3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 Matrix3::inverse() const {
  FieldScalar d = det();
  if (d.is_zero()) throw MathError("singular matrix");
  FieldScalar di = d.inverse();
  const Matrix3& m = *this;
  Matrix3 r = identity(field());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r(i, j) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) * di;
    }
  return r;
}

HomPoly substitute_linear(const HomPoly& p, const Matrix3& M) {
  if (p.nvars() != 3) throw MathError("substitution needs three variables");
  if (M.det().is_zero()) throw MathError("singular matrix");
  std::vector<HomPoly> lin;
  for (int i = 0; i < 3; ++i) lin.push_back(HomPoly::linear(M(i, 0), M(i, 1), M(i, 2)));
  std::vector<std::vector<HomPoly>> pw(3);
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(HomPoly::constant(FieldScalar(p.field(), Rational(1)), 3));
    for (int e = 1; e <= p.degree(); ++e) pw[i].push_back(pw[i].back() * lin[i]);
  }
  HomPoly r(p.field(), 3, p.degree());
  for (const auto& [k, c] : p.terms()) {
    Monomial m = HomPoly::unpack(k);
    r += pw[0][m.a] * pw[1][m.b] * pw[2][m.c] * c;
  }
  return r;
}

int binary_distinct_roots(const HomPoly& p) {
  if (p.nvars() != 2) throw MathError("expected a bivariate polynomial");
  if (p.is_zero()) throw MathError("zero polynomial has infinitely many roots");
  const FieldPtr& K = p.field();
  const FieldScalar zero(K);
  // Dehomogenize at z = 1: coefficient of y^b.
  std::vector<FieldScalar> P(p.degree() + 1, zero);
  for (const auto& [k, c] : p.terms()) P[HomPoly::unpack(k).b] = c;
  detail::trim(P);
  int roots = detail::degree(P) < p.degree() ? 1 : 0;
  if (detail::degree(P) > 0) {
    auto g = detail::gcd(P, detail::derivative(P, zero), zero);
    roots += detail::degree(P) - detail::degree(g);
  }
  return roots;
}

bool proportional(const std::vector<FieldScalar>& a, const std::vector<FieldScalar>& b) {
  if (a.size() != b.size()) return false;
  std::size_t i = 0;
  while (i < a.size() && a[i].is_zero()) ++i;
  if (i == a.size()) {
    for (const auto& x : b)
      if (!x.is_zero()) return false;
    return true;
  }
  if (b[i].is_zero()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!(a[j] * b[i] == b[j] * a[i])) return false;
  return true;
}

bool proportional(const HomPoly& a, const HomPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree() || a.nvars() != b.nvars() || a.size() != b.size()) return false;
  const FieldScalar la = a.leading_coeff(), lb = b.leading_coeff();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (!(ia->second * lb == ib->second * la)) return false;
  }
  return true;
}

Derivation::Derivation(HomPoly a_, HomPoly b_, HomPoly c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.degree() != b.degree() || a.degree() != c.degree()) throw MathError("derivation components differ in degree");
  if (a.nvars() != 3 || b.nvars() != 3 || c.nvars() != 3) throw MathError("derivations live in three variables");
}

Derivation Derivation::zero(const FieldPtr& field, int degree) {
  HomPoly z(field, 3, degree);
  return Derivation(z, z, z);
}

Derivation Derivation::euler(const FieldPtr& field) {
  return Derivation(HomPoly::variable(field, 3, 0), HomPoly::variable(field, 3, 1), HomPoly::variable(field, 3, 2));
}

Derivation Derivation::constant(const FieldScalar& u, const FieldScalar& v, const FieldScalar& w) {
  return Derivation(HomPoly::constant(u, 3), HomPoly::constant(v, 3), HomPoly::constant(w, 3));
}

Derivation Derivation::from_flat(const FieldPtr& field, int degree, const std::vector<FieldScalar>& v) {
  const std::size_t n = num_monomials(3, degree);
  if (v.size() != 3 * n) throw MathError("flat derivation length mismatch");
  auto part = [&](std::size_t i) {
    return HomPoly::from_coeffs(field, 3, degree, std::vector<FieldScalar>(v.begin() + i * n, v.begin() + (i + 1) * n));
  };
  return Derivation(part(0), part(1), part(2));
}

std::vector<FieldScalar> Derivation::flat() const {
  auto out = a.coeffs();
  auto bb = b.coeffs(), cc = c.coeffs();
  out.insert(out.end(), bb.begin(), bb.end());
  out.insert(out.end(), cc.begin(), cc.end());
  return out;
}

HomPoly Derivation::apply(const HomPoly& g) const {
  if (g.degree() == 0) return HomPoly(g.field(), 3, std::max(degree() - 1, 0));
  return a * g.partial(0) + b * g.partial(1) + c * g.partial(2);
}

std::vector<FieldScalar> Derivation::eval(const FieldScalar& u, const FieldScalar& v, const FieldScalar& w) const {
  return {a.eval(u, v, w), b.eval(u, v, w), c.eval(u, v, w)};
}

Derivation Derivation::operator+(const Derivation& o) const { return Derivation(a + o.a, b + o.b, c + o.c); }
Derivation Derivation::operator-(const Derivation& o) const { return Derivation(a - o.a, b - o.b, c - o.c); }
Derivation Derivation::operator*(const HomPoly& h) const { return Derivation(a * h, b * h, c * h); }
Derivation Derivation::operator*(const FieldScalar& s) const { return Derivation(a * s, b * s, c * s); }

std::string Derivation::to_string() const {
  return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

BiDerivation::BiDerivation(HomPoly b_, HomPoly c_) : b(std::move(b_)), c(std::move(c_)) {
  if (b.degree() != c.degree()) throw MathError("derivation components differ in degree");
  if (b.nvars() != 2 || c.nvars() != 2) throw MathError("expected bivariate components");
}

HomPoly BiDerivation::apply(const HomPoly& g) const {
  if (g.degree() == 0) return HomPoly(g.field(), 2, std::max(degree() - 1, 0));
  return b * g.partial(1) + c * g.partial(2);
}

std::vector<FieldScalar> BiDerivation::flat() const {
  auto out = b.coeffs();
  auto cc = c.coeffs();
  out.insert(out.end(), cc.begin(), cc.end());
  return out;
}

BiDerivation BiDerivation::operator*(const HomPoly& h) const { return BiDerivation(b * h, c * h); }
BiDerivation BiDerivation::operator*(const FieldScalar& s) const { return BiDerivation(b * s, c * s); }

std::string BiDerivation::to_string() const { return "(" + b.to_string() + ", " + c.to_string() + ")"; }

}  // namespace linarr

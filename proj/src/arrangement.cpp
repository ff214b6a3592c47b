#include "linarr/arrangement.hpp"

#include <istream>
#include <map>
#include <sstream>

namespace linarr {

namespace {

// Scales (a, b, c) so the first nonzero entry is 1.
void normalize3(FieldScalar& a, FieldScalar& b, FieldScalar& c, const char* what) {
  FieldScalar* lead = !a.is_zero() ? &a : (!b.is_zero() ? &b : (!c.is_zero() ? &c : nullptr));
  if (!lead) throw MathError(std::string("zero ") + what);
  if (lead->is_one()) return;
  FieldScalar inv = lead->inverse();
  a *= inv;
  b *= inv;
  c *= inv;
}

std::strong_ordering cmp3(const FieldScalar& a1, const FieldScalar& b1, const FieldScalar& c1, const FieldScalar& a2,
                          const FieldScalar& b2, const FieldScalar& c2) {
  if (auto r = a1 <=> a2; r != 0) return r;
  if (auto r = b1 <=> b2; r != 0) return r;
  return c1 <=> c2;
}

// Cross product of coefficient vectors.
void cross(const FieldScalar& a1, const FieldScalar& b1, const FieldScalar& c1, const FieldScalar& a2,
           const FieldScalar& b2, const FieldScalar& c2, FieldScalar& x, FieldScalar& y, FieldScalar& z) {
  x = b1 * c2 - c1 * b2;
  y = c1 * a2 - a1 * c2;
  z = a1 * b2 - b1 * a2;
}

long binom2(long n) { return n * (n - 1) / 2; }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ProjPoint::ProjPoint(FieldScalar u_, FieldScalar v_, FieldScalar w_)
    : u(std::move(u_)), v(std::move(v_)), w(std::move(w_)) {
  if (!same_field(u.field(), v.field()) || !same_field(u.field(), w.field())) throw MathError("field mismatch");
  normalize3(u, v, w, "point");
}

ProjPoint ProjPoint::make(const FieldPtr& field, long u, long v, long w) {
  return ProjPoint(FieldScalar(field, u), FieldScalar(field, v), FieldScalar(field, w));
}

std::strong_ordering ProjPoint::operator<=>(const ProjPoint& o) const { return cmp3(u, v, w, o.u, o.v, o.w); }

std::string ProjPoint::to_string() const { return "(" + u.to_string() + ":" + v.to_string() + ":" + w.to_string() + ")"; }

LinearForm::LinearForm(FieldScalar a, FieldScalar b, FieldScalar c)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
  if (!same_field(alpha.field(), beta.field()) || !same_field(alpha.field(), gamma.field()))
    throw MathError("field mismatch");
  normalize3(alpha, beta, gamma, "linear form");
}

LinearForm LinearForm::make(const FieldPtr& field, long a, long b, long c) {
  return LinearForm(FieldScalar(field, a), FieldScalar(field, b), FieldScalar(field, c));
}

std::strong_ordering LinearForm::operator<=>(const LinearForm& o) const {
  return cmp3(alpha, beta, gamma, o.alpha, o.beta, o.gamma);
}

std::string LinearForm::to_string() const { return poly().to_string(); }

ProjPoint intersect(const LinearForm& l1, const LinearForm& l2) {
  if (l1 == l2) throw MathError("lines coincide");
  FieldScalar x(l1.field()), y(l1.field()), z(l1.field());
  cross(l1.alpha, l1.beta, l1.gamma, l2.alpha, l2.beta, l2.gamma, x, y, z);
  return ProjPoint(x, y, z);
}

LinearForm join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw MathError("points coincide");
  FieldScalar x(p.field()), y(p.field()), z(p.field());
  cross(p.u, p.v, p.w, q.u, q.v, q.w, x, y, z);
  return LinearForm(x, y, z);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  Matrix3 m;
  m.e = {p.u, p.v, p.w, q.u, q.v, q.w, r.u, r.v, r.w};
  return m.det().is_zero();
}

Arrangement::Arrangement(FieldPtr field, std::vector<LinearForm> lines) : field_(std::move(field)), lines_(std::move(lines)) {
  if (lines_.size() < 2) throw MathError("an arrangement needs at least two lines");
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (!same_field(lines_[i].field(), field_)) throw MathError("field mismatch");
    for (std::size_t j = 0; j < i; ++j)
      if (lines_[i] == lines_[j]) throw MathError("repeated line " + lines_[i].to_string());
  }
  build_lattice();
}

void Arrangement::build_lattice() {
  std::map<ProjPoint, std::size_t> seen;
  const int d = degree();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ProjPoint p = intersect(lines_[i], lines_[j]);
      if (seen.count(p)) continue;
      seen.emplace(p, lattice_.size());
      LatticePoint lp{p, 0, {}};
      for (int k = 0; k < d; ++k)
        if (lines_[k].contains(p)) lp.incident.push_back(k);
      lp.multiplicity = static_cast<int>(lp.incident.size());
      lattice_.push_back(std::move(lp));
    }
  }
  long pairs = 0;
  for (const auto& lp : lattice_) pairs += binom2(lp.multiplicity);
  if (pairs != binom2(d)) throw InternalError("lattice pair count mismatch");
}

std::optional<std::size_t> Arrangement::find_point(const ProjPoint& p) const {
  for (std::size_t i = 0; i < lattice_.size(); ++i)
    if (lattice_[i].point == p) return i;
  return std::nullopt;
}

std::optional<std::size_t> Arrangement::find_line(const LinearForm& l) const {
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i] == l) return i;
  return std::nullopt;
}

int Arrangement::max_multiplicity() const {
  int m = 0;
  for (const auto& lp : lattice_) m = std::max(m, lp.multiplicity);
  return m;
}

long Arrangement::tau() const {
  long t = 0;
  for (const auto& lp : lattice_) t += static_cast<long>(lp.multiplicity - 1) * (lp.multiplicity - 1);
  return t;
}

HomPoly Arrangement::product(const std::vector<int>& indices) const {
  HomPoly p = HomPoly::constant(FieldScalar(field_, Rational(1)), 3);
  for (int i : indices) p = p * lines_[i].poly();
  return p;
}

HomPoly Arrangement::defining_poly() const {
  std::vector<int> all(lines_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return product(all);
}

std::pair<HomPoly, HomPoly> Arrangement::split_at(const LatticePoint& p) const {
  if (p.multiplicity >= degree()) throw MathError("pencil at " + p.point.to_string());
  std::vector<int> in, out;
  for (int i = 0; i < degree(); ++i) (lines_[i].contains(p.point) ? in : out).push_back(i);
  return {product(in), product(out)};
}

bool Arrangement::connected(const ProjPoint& p, const ProjPoint& q) const {
  if (p == q) throw MathError("connected() needs two distinct points");
  return has_line(join(p, q));
}

std::vector<std::size_t> Arrangement::unconnected_points(std::size_t p) const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < lattice_.size(); ++q)
    if (q != p && !connected(lattice_[p].point, lattice_[q].point)) out.push_back(q);
  return out;
}

std::vector<std::size_t> Arrangement::modular_points() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < lattice_.size(); ++p)
    if (unconnected_points(p).empty()) out.push_back(p);
  return out;
}

bool Arrangement::is_supersolvable() const {
  if (is_pencil()) throw MathError("supersolvability is defined here for non-pencils");
  return !modular_points().empty();
}

EulerNumbers Arrangement::euler_complement() const {
  const long d = degree();
  EulerNumbers e;
  e.by_tau = 3 - (2 - (d - 1) * (d - 2) + tau());
  long s = 0;
  for (const auto& lp : lattice_) s += lp.multiplicity - 1;
  e.by_strata = 3 - (2 * d - s);
  if (e.by_tau != e.by_strata) throw InternalError("Euler number formulas disagree");
  return e;
}

Arrangement Arrangement::deleted(std::size_t line) const {
  std::vector<LinearForm> rest;
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (i != line) rest.push_back(lines_[i]);
  return Arrangement(field_, std::move(rest));
}

Arrangement Arrangement::substituted(const Matrix3& M) const {
  std::vector<LinearForm> out;
  for (const auto& l : lines_) {
    FieldScalar a = l.alpha * M(0, 0) + l.beta * M(1, 0) + l.gamma * M(2, 0);
    FieldScalar b = l.alpha * M(0, 1) + l.beta * M(1, 1) + l.gamma * M(2, 1);
    FieldScalar c = l.alpha * M(0, 2) + l.beta * M(1, 2) + l.gamma * M(2, 2);
    out.emplace_back(a, b, c);
  }
  return Arrangement(field_, std::move(out));
}

Arrangement parse_arrangement(std::istream& in) {
  FieldPtr field;
  std::vector<LinearForm> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    if (!field) {
      if (s.rfind("field:", 0) != 0) fail("expected 'field: <modulus>'");
      std::string mod = trim(s.substr(6));
      if (mod == "Q" || mod == "QQ") {
        field = rational_field();
      } else {
        auto coeffs = parse_univariate(mod);
        field = coeffs == rational_field()->modulus() ? rational_field() : make_field(coeffs);
      }
      continue;
    }
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(trim(tok));
    if (parts.size() != 3) fail("expected 'alpha, beta, gamma'");
    lines.emplace_back(parse_scalar(parts[0], field), parse_scalar(parts[1], field), parse_scalar(parts[2], field));
  }
  if (!field) throw ParseError("missing field header");
  return Arrangement(field, std::move(lines));
}

Arrangement parse_arrangement_text(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

std::string format_arrangement(const Arrangement& a) {
  std::ostringstream os;
  os << "field: " << a.field()->to_string() << "\n";
  for (const auto& l : a.lines())
    os << l.alpha.to_string() << ", " << l.beta.to_string() << ", " << l.gamma.to_string() << "\n";
  return os.str();
}

}  // namespace linarr

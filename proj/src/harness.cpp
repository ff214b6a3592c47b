#include "linarr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linarr/cover.hpp"
#include "linarr/delres.hpp"
#include "linarr/localder.hpp"
#include "linarr/syzygy.hpp"

namespace linarr {

namespace {

using Params = std::vector<int>;

FieldScalar num(const FieldPtr& k, long v) { return FieldScalar(k, v); }

LinearForm form(const FieldPtr& k, long a, long b, long c) { return LinearForm::make(k, a, b, c); }

Arrangement triangle(const Params&) {
  auto q = rational_field();
  return Arrangement(q, {form(q, 1, 0, 0), form(q, 0, 1, 0), form(q, 0, 0, 1)});
}

Arrangement full_monomial_3(const Params&) {
  auto q = rational_field();
  return Arrangement(q, {form(q, 1, 0, 0), form(q, 0, 1, 0), form(q, 0, 0, 1), form(q, 1, -1, 0), form(q, 0, 1, -1),
                         form(q, 1, 0, -1)});
}

Arrangement ssv(const Params&) {
  auto q = rational_field();
  return Arrangement(q, {form(q, 1, 0, 0), form(q, 0, 1, 0), form(q, 0, 0, 1), form(q, 1, -1, 0), form(q, 1, 1, 0),
                         form(q, 0, 1, -1)});
}

// Field containing the m-th roots of unity and a primitive one.
std::pair<FieldPtr, FieldScalar> roots_of_unity(int m) {
  if (m < 1) throw MathError("need m >= 1");
  if (m <= 2) {
    auto q = rational_field();
    return {q, num(q, m == 1 ? 1 : -1)};
  }
  auto k = make_cyclotomic(m);
  return {k, FieldScalar::generator(k)};
}

std::vector<LinearForm> monomial_lines(int m, const FieldPtr& k, const FieldScalar& zeta) {
  std::vector<LinearForm> lines;
  const FieldScalar one = num(k, 1), zero = num(k, 0);
  for (int i = 0; i < m; ++i) {
    const FieldScalar c = -zeta.pow(i);
    lines.emplace_back(one, c, zero);
    lines.emplace_back(zero, one, c);
    lines.emplace_back(one, zero, c);
  }
  return lines;
}

Arrangement mono(const Params& p) {
  auto [k, zeta] = roots_of_unity(p.at(0));
  return Arrangement(k, monomial_lines(p[0], k, zeta));
}

Arrangement akx(const Params& p) {
  auto [k, zeta] = roots_of_unity(p.at(0));
  auto lines = monomial_lines(p[0], k, zeta);
  lines.push_back(form(k, 1, 0, 0));
  return Arrangement(k, lines);
}

Arrangement hessian(const Params&) {
  auto k = make_cyclotomic(3);
  const FieldScalar eps = FieldScalar::generator(k);
  std::vector<LinearForm> lines{form(k, 1, 0, 0), form(k, 0, 1, 0), form(k, 0, 0, 1)};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) lines.emplace_back(num(k, 1), eps.pow(a), eps.pow(b));
  Arrangement out(k, lines);

  auto x = HomPoly::variable(k, 3, 0), y = HomPoly::variable(k, 3, 1), z = HomPoly::variable(k, 3, 2);
  const HomPoly cubic = x.pow(3) + y.pow(3) + z.pow(3);
  const HomPoly xyz = x * y * z;
  const HomPoly target = xyz * (cubic.pow(3) - xyz.pow(3) * Rational(27));
  if (!proportional(out.defining_poly(), target)) throw InternalError("Hessian lines do not multiply to the Hessian form");
  return out;
}

// n1 lines through (0:0:1) and n2 lines through (1:0:0), no common line.
Arrangement pencils(const Params& p) {
  if (p.at(0) < 1 || p.at(1) < 1) throw MathError("pencil sizes must be positive");
  auto q = rational_field();
  std::vector<LinearForm> lines;
  for (int c = 0; c < p[0]; ++c) lines.push_back(form(q, 1, -c, 0));
  for (int c = 1; c <= p[1]; ++c) lines.push_back(form(q, 0, 1, -c));
  return Arrangement(q, lines);
}

// Same two centers, sharing the line y = 0.
Arrangement pencils_joined(const Params& p) {
  if (p.at(0) < 2 || p.at(1) < 2) throw MathError("pencil sizes must be at least 2");
  auto q = rational_field();
  std::vector<LinearForm> lines{form(q, 0, 1, 0)};
  for (int c = 1; c < p[0]; ++c) lines.push_back(form(q, 1, -c, 0));
  for (int c = 1; c < p[1]; ++c) lines.push_back(form(q, 0, 1, -c));
  return Arrangement(q, lines);
}

Arrangement generic(const Params& p) {
  if (p.at(0) < 3) throw MathError("need d >= 3");
  auto q = rational_field();
  std::vector<LinearForm> lines;
  for (long c = 0; c < p[0]; ++c) lines.push_back(form(q, 1, c, c * c));
  return Arrangement(q, lines);
}

// x, y, x - y and further lines avoiding every existing multiple point.
Arrangement one_triple(const Params& p) {
  if (p.at(0) < 3) throw MathError("need d >= 3");
  auto q = rational_field();
  std::vector<LinearForm> lines{form(q, 1, 0, 0), form(q, 0, 1, 0), form(q, 1, -1, 0)};
  for (long a = 1; static_cast<int>(lines.size()) < p[0]; ++a) {
    for (long b = 2; b < 2 + a && static_cast<int>(lines.size()) < p[0]; ++b) {
      LinearForm l = form(q, a, b * b + a, 1);
      if (std::find(lines.begin(), lines.end(), l) != lines.end()) continue;
      std::vector<LinearForm> next = lines;
      next.push_back(l);
      Arrangement trial(q, next);
      if (trial.max_multiplicity() > 3) continue;
      int triples = 0;
      for (const auto& lp : trial.lattice()) triples += lp.multiplicity == 3 ? 1 : 0;
      if (triples == 1) lines = next;
    }
  }
  return Arrangement(q, lines);
}

// Seven lines found by search; plus-one generated with exponents (3, 4, 5).
Arrangement plus_one(const Params&) {
  auto q = rational_field();
  return Arrangement(q, {form(q, 1, -1, 1), form(q, 1, 1, -1), form(q, 0, 1, 0), form(q, 1, 1, 0), form(q, 0, 0, 1),
                         form(q, 1, 0, -1), form(q, 0, 1, 1)});
}

Arrangement external_slot(const Params&) {
  throw MathError("external data: the coordinates of this pair are not shipped; pass both arrangement files instead");
}

ExpectedValue ev(std::string key, long v, Origin o) { return {std::move(key), std::to_string(v), o}; }
ExpectedValue ev(std::string key, std::string v, Origin o) { return {std::move(key), std::move(v), o}; }

constexpr Origin pub = Origin::published;
constexpr Origin cmp = Origin::computed;

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"TRIANGLE", {}, "xyz", triangle, [](const Params&) {
                 return std::vector<ExpectedValue>{ev("free", 1, cmp), ev("d1", 1, cmp), ev("d2", 1, cmp),
                                                   ev("tau", 3, cmp),  ev("N", 2, cmp),  ev("N0", 2, cmp)};
               }});
  c.push_back({"F3", {}, "xyz(x-y)(y-z)(x-z)", full_monomial_3, [](const Params&) {
                 return std::vector<ExpectedValue>{ev("free", 1, pub), ev("d1", 2, pub), ev("d2", 3, pub),
                                                   ev("dim4", 9, pub), ev("tau", 19, cmp), ev("N", 3, cmp),
                                                   ev("N0", 3, cmp)};
               }});
  c.push_back({"SSV", {}, "xyz(x^2-y^2)(y-z)", ssv, [](const Params&) {
                 return std::vector<ExpectedValue>{ev("d1", 2, pub), ev("free", 1, cmp), ev("d2", 3, cmp),
                                                   ev("tau", 19, cmp), ev("N", 3, cmp), ev("N0", 3, cmp)};
               }});
  c.push_back({"HESSIAN", {}, "xyz((x^3+y^3+z^3)^3-27x^3y^3z^3) over Q(t), t^2+t+1=0", hessian, [](const Params&) {
                 return std::vector<ExpectedValue>{ev("free", 1, pub), ev("d1", 4, pub), ev("d2", 7, cmp),
                                                   ev("tau", 93, cmp),  ev("dim9", 27, cmp), ev("N", 5, pub),
                                                   ev("N0_min", 6, pub), ev("N0", 8, cmp)};
               }});
  c.push_back({"MONO", {4}, "(x^m-y^m)(y^m-z^m)(x^m-z^m) over the m-th cyclotomic field", mono, [](const Params& p) {
                 std::vector<ExpectedValue> v{ev("free", 1, cmp), ev("d1", p[0] + 1, cmp), ev("d2", 2 * p[0] - 2, cmp)};
                 if (p[0] >= 4) v.push_back(ev("mdr", p[0] + 1, pub));
                 return v;
               }});
  c.push_back({"AKX", {2}, "MONO(k) plus the line x = 0", akx, [](const Params& p) {
                 return std::vector<ExpectedValue>{ev("free", 1, pub), ev("d1", p[0] + 1, pub), ev("N", p[0] + 1, pub)};
               }});
  c.push_back({"PENCILS", {3, 4}, "n1 lines through (0:0:1), n2 lines through (1:0:0), none shared", pencils,
               [](const Params& p) {
                 std::vector<int> g{p[0], p[1], p[0] + p[1] - 2};
                 std::sort(g.begin(), g.end());
                 std::vector<ExpectedValue> v;
                 if (p[0] >= 2 && p[1] >= 2)
                   v.push_back(ev("gens", std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]), pub));
                 return v;
               }});
  c.push_back({"PENCILS_JOINED", {3, 4}, "two pencils sharing the line y = 0", pencils_joined, [](const Params& p) {
                 return std::vector<ExpectedValue>{ev("free", 1, cmp), ev("d1", std::min(p[0], p[1]) - 1, cmp),
                                                   ev("d2", std::max(p[0], p[1]) - 1, cmp)};
               }});
  c.push_back({"GENERIC", {5}, "x + c y + c^2 z, c = 0..d-1 (only double points)", generic, [](const Params& p) {
                 return std::vector<ExpectedValue>{ev("d1", p[0] - 2, cmp), ev("N", p[0] - 1, cmp)};
               }});
  c.push_back({"ONE_TRIPLE", {6}, "one triple point, all other points double", one_triple, [](const Params& p) {
                 return std::vector<ExpectedValue>{ev("d1", p[0] - 3, cmp), ev("N", p[0] - 2, cmp)};
               }});
  c.push_back({"PLUS_ONE", {}, "seven lines, plus-one generated", plus_one, [](const Params&) {
                 return std::vector<ExpectedValue>{ev("free", 0, cmp), ev("gens", "3,4,5", cmp), ev("tau", 25, cmp)};
               }});
  c.push_back({"ZIEGLER", {}, "external data: pair with equal lattices and different D_0(f)_5", external_slot,
               [](const Params&) { return std::vector<ExpectedValue>{}; }, true});
  return c;
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join_longs(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Report filtered(const Report& r, const std::string& suite, const std::string& prefix) {
  Report out(suite, r.target());
  for (const auto& c : r.checks())
    if (c.id.rfind(prefix, 0) == 0) out.add(c.id, c.status, c.detail).facts = c.facts;
  if (out.checks().empty()) out.add(suite, Status::hypothesis_not_met, "no applicable check");
  return out;
}

// A line through q that is not in the arrangement and misses p.
std::optional<LinearForm> free_line_through(const Arrangement& a, const ProjPoint& q, const ProjPoint& p) {
  const FieldPtr& k = a.field();
  for (long u = -2; u <= 2; ++u)
    for (long v = -2; v <= 2; ++v)
      for (long w = -2; w <= 2; ++w) {
        ProjPoint r(num(k, u), num(k, v), num(k, w));
        if (r == q) continue;
        LinearForm l = join(q, r);
        if (!a.has_line(l) && !l.contains(p)) return l;
      }
  return std::nullopt;
}

// Unconnected points of p together with the lines L containing them that the
// projection identities apply to.
std::vector<LinearForm> carrier_lines(const Arrangement& a, std::size_t p) {
  const auto Q = a.unconnected_points(p);
  const auto& pts = a.lattice();
  std::vector<LinearForm> out;
  if (Q.empty()) return out;
  if (Q.size() >= 2) {
    LinearForm l = join(pts[Q[0]].point, pts[Q[1]].point);
    for (auto q : Q)
      if (!l.contains(pts[q].point)) return out;
    out.push_back(l);
    return out;
  }
  const auto& q = pts[Q[0]];
  out.push_back(a.lines()[q.incident.front()]);
  out.push_back(join(pts[p].point, q.point));
  if (auto l = free_line_through(a, q.point, pts[p].point)) out.push_back(*l);
  return out;
}

struct Context {
  const Arrangement& a;
  VerifyOptions opt;
  std::optional<SyzygyModule> module_;
  std::optional<CoverResult> cover_;

  const SyzygyModule& module() {
    if (!module_) module_.emplace(a.defining_poly(), opt.max_degree);
    return *module_;
  }
  const CoverResult& cover() {
    if (!cover_) cover_ = min_cover(a);
    return *cover_;
  }
};

Report per_point(const std::string& suite, Context& cx, const std::function<Report(std::size_t)>& f) {
  Report out(suite, "");
  for (std::size_t p = 0; p < cx.a.lattice().size(); ++p) out.merge(f(p));
  return out;
}

Report per_line(const std::string& suite, Context& cx, const std::function<Report(std::size_t)>& f) {
  Report out(suite, "");
  for (std::size_t l = 0; l < cx.a.lines().size(); ++l) out.merge(f(l));
  return out;
}

Report run_thm3(Context& cx) {
  const auto& pts = cx.a.lattice();
  std::vector<std::size_t> big;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].multiplicity >= 3) big.push_back(i);
  std::optional<Report> first;
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j)
      for (std::size_t k = j + 1; k < big.size(); ++k) {
        if (collinear(pts[big[i]].point, pts[big[j]].point, pts[big[k]].point)) continue;
        Report r = span_thm3(cx.a, cx.module(), big[i], big[j], big[k]);
        if (r.overall() != Status::hypothesis_not_met) return r;
        if (!first) first = r;
      }
  if (first) return *first;
  Report r("thm3", "");
  r.add("thm3", Status::hypothesis_not_met, "no three non-collinear points of multiplicity >= 3");
  return r;
}

Report run_suite(Context& cx, const std::string& id) {
  const Arrangement& a = cx.a;
  if (id == "thmD") return dims_theorem_check(a, cx.module());
  if (id == "corD") return filtered(dims_theorem_check(a, cx.module()), "corD", "corD");
  if (id == "cor20") return lower_bound_check(a, cx.module());
  if (id == "nhilbert") return n_hilbert_check(a, cx.module());
  if (id == "thm1") return per_point(id, cx, [&](std::size_t p) { return check_thm1_properties(a, p); });
  if (id == "thm2") return span_thm2(a, cx.module());
  if (id == "thm3") return run_thm3(cx);
  if (id == "thmG-span") return span_thmG(a, cx.module());
  if (id == "thm4") return freeness_thm4(a, cx.module());
  if (id == "prop4") return bourbaki_check(a, cx.module());
  if (id == "prop40") return verify_prop40(a, cx.module());
  if (id == "propthm10") return tangency_checks(a, minimal_syzygy(cx.module()));
  if (id == "thm1G-exact") return per_line(id, cx, [&](std::size_t l) { return exactness_check(a, l); });
  if (id == "propG1" || id == "propG2")
    return filtered(per_line(id, cx, [&](std::size_t l) { return local_images_check(a, l); }), id, id);
  if (id == "eqG7") return per_line(id, cx, [&](std::size_t l) { return verify_eqG7(a, l); });
  if (id == "eqG8")
    return per_line(id, cx, [&](std::size_t l) {
      const auto moved = move_line_to_x(a, l);
      return verify_eqG8(restriction_profile(moved.arrangement, moved.line));
    });
  if (id == "cor1G")
    return per_line(id, cx, [&](std::size_t l) {
      std::vector<int> rest;
      for (int i = 0; i < a.degree(); ++i)
        if (i != static_cast<int>(l)) rest.push_back(i);
      return cor1G_check(a.product(rest), a.lines()[l]);
    });
  if (id == "conj10") return conjecture_check(a, cx.module(), cx.cover());
  if (id == "thm1000") return per_point(id, cx, [&](std::size_t p) { return thm1000_report(a, cx.module(), p); });
  if (id == "thm100") return thm100_check(a, cx.module(), cx.cover());
  if (id == "rkex10" || id == "tau-cases")
    return per_point(id, cx, [&](std::size_t p) {
      Report r(id, "");
      const auto lines = carrier_lines(a, p);
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (id == "rkex10" && i > 0) break;
        r.merge(id == "rkex10" ? rkex10_bounds(a, p, lines[i]) : tau_case_identity(a, p, lines[i]));
      }
      return r;
    });
  if (id == "lem10")
    return per_point(id, cx, [&](std::size_t p) {
      if (a.lattice()[p].multiplicity != a.max_multiplicity()) return Report(id, "");
      return lem10_euler(a, p);
    });
  throw std::invalid_argument("unknown suite id: " + id);
}

Report guarded(Context& cx, const std::string& id) {
  Report out(id, "");
  if (cx.a.is_pencil()) {
    out.add(id, Status::hypothesis_not_met, "pencil");
    return out;
  }
  try {
    const double s = timed([&] { out = run_suite(cx, id); });
    out.set_seconds(s);
  } catch (const MathError& e) {
    out = Report(id, "");
    out.add(id, Status::inconclusive, e.what());
  }
  if (out.checks().empty()) out.add(id, Status::hypothesis_not_met, "no applicable point or line");
  return out;
}

}  // namespace

std::string to_string(Origin o) { return o == Origin::published ? "published" : "computed"; }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

CatalogName parse_catalog_name(const std::string& text) {
  CatalogName out;
  const auto open = text.find('(');
  out.name = text.substr(0, open);
  if (out.name.empty()) throw ParseError("empty catalog name");
  if (open == std::string::npos) return out;
  if (text.back() != ')') throw ParseError("missing ')' in " + text);
  std::stringstream ss(text.substr(open + 1, text.size() - open - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.params.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(' ', used) != std::string::npos) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad parameter '" + item + "' in " + text);
    }
  }
  return out;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw ParseError("unknown catalog entry " + name);
}

namespace {

Params full_params(const CatalogEntry& e, Params p) {
  if (p.size() > e.defaults.size()) throw ParseError(e.name + " takes " + std::to_string(e.defaults.size()) + " parameters");
  for (std::size_t i = p.size(); i < e.defaults.size(); ++i) p.push_back(e.defaults[i]);
  return p;
}

}  // namespace

Arrangement build_catalog(const std::string& text) {
  const auto n = parse_catalog_name(text);
  const auto& e = catalog_entry(n.name);
  return e.builder(full_params(e, n.params));
}

std::vector<ExpectedValue> catalog_expected(const std::string& text) {
  const auto n = parse_catalog_name(text);
  const auto& e = catalog_entry(n.name);
  return e.expected(full_params(e, n.params));
}

Arrangement load_target(const std::string& target) {
  if (target.rfind("catalog:", 0) == 0) return build_catalog(target.substr(8));
  std::ifstream in(target);
  if (!in) throw ParseError("cannot open " + target);
  return parse_arrangement(in);
}

Report check_expected(const std::string& text, int max_degree) {
  Report r("expected", text);
  const Arrangement a = build_catalog(text);
  Context cx{a, {max_degree}, {}, {}};
  for (const auto& e : catalog_expected(text)) {
    std::string got;
    bool ok = false;
    if (e.key == "tau") {
      got = std::to_string(a.tau());
    } else if (e.key == "free") {
      got = is_free(a, cx.module()).free ? "1" : "0";
    } else if (e.key == "d1" || e.key == "mdr") {
      got = std::to_string(cx.module().mdr());
    } else if (e.key == "d2") {
      const auto g = cx.module().generator_degrees();
      got = g.size() >= 2 ? std::to_string(g[1]) : "none";
    } else if (e.key == "gens") {
      got = join_ints(cx.module().generator_degrees());
    } else if (e.key == "N") {
      got = std::to_string(cx.cover().N);
    } else if (e.key == "N0") {
      got = std::to_string(cx.cover().N0);
    } else if (e.key == "N0_min") {
      got = std::to_string(cx.cover().N0);
      ok = cx.cover().N0 >= std::stoi(e.value);
    } else if (e.key.rfind("dim", 0) == 0) {
      got = std::to_string(cx.module().dim(std::stoi(e.key.substr(3))));
    } else {
      throw InternalError("unknown expected key " + e.key);
    }
    if (e.key != "N0_min") ok = got == e.value;
    r.expect("expected." + e.key, ok, "want " + e.value + ", got " + got).fact("origin", to_string(e.origin));
  }
  return r;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{
      "thmD",   "corD",        "cor20",  "nhilbert", "thm1",   "thm2",   "thm3",   "thmG-span",
      "thm4",   "prop4",       "prop40", "propthm10", "thm1G-exact", "propG1", "propG2", "eqG7",
      "eqG8",   "cor1G",       "conj10", "thm1000",  "thm100", "rkex10", "lem10",  "tau-cases", "full"};
  return ids;
}

Report verify(const Arrangement& a, const std::string& suite, const VerifyOptions& opt) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), suite) == ids.end()) throw std::invalid_argument("unknown suite id: " + suite);
  Context cx{a, opt, {}, {}};
  if (suite != "full") return guarded(cx, suite);
  Report out("full", "");
  for (const auto& id : ids)
    if (id != "full") out.merge(guarded(cx, id));
  return out;
}

Report verify_ziegler_pair(const Arrangement& a, const Arrangement& b) {
  Report r("thmD2", "external data");
  auto mults = [](const Arrangement& x) {
    std::vector<int> m;
    for (const auto& lp : x.lattice()) m.push_back(lp.multiplicity);
    std::sort(m.begin(), m.end());
    return m;
  };
  const bool same = a.degree() == b.degree() && mults(a) == mults(b);
  r.expect("thmD2.lattice", same, "same degree and point multiplicities").fact("source", "external data");
  r.expect("thmD2.tau", a.tau() == b.tau(), "equal global Tjurina numbers")
      .fact("tau_first", a.tau())
      .fact("tau_second", b.tau());
  if (!same) return r;
  SyzygyModule ma(a.defining_poly(), std::max(5, a.degree() - 1));
  SyzygyModule mb(b.defining_poly(), std::max(5, b.degree() - 1));
  r.expect("thmD2.dim5", ma.dim(5) != mb.dim(5), "dimensions of D_0(f)_5 differ")
      .fact("dim5_first", ma.dim(5))
      .fact("dim5_second", mb.dim(5));
  return r;
}

Arrangement random_arrangement(std::uint64_t seed, int d, int max_coeff) {
  if (d < 3) throw MathError("random arrangements need d >= 3");
  if (max_coeff < 1) throw MathError("max_coeff must be positive");
  auto q = rational_field();
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> coef(-max_coeff, max_coeff);
  for (;;) {
    std::vector<LinearForm> lines;
    for (int guard = 0; static_cast<int>(lines.size()) < d && guard < 1000 * d; ++guard) {
      const long u = coef(gen), v = coef(gen), w = coef(gen);
      if (u == 0 && v == 0 && w == 0) continue;
      LinearForm l = form(q, u, v, w);
      if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
    }
    if (static_cast<int>(lines.size()) < d) throw MathError("coefficient range too small for " + std::to_string(d) + " lines");
    Arrangement a(q, lines);
    if (!a.is_pencil()) return a;
  }
}

Report analyze(const Arrangement& a, const VerifyOptions& opt) {
  Report r("analyze", "");
  const double secs = timed([&] {
    auto& lat = r.add("lattice", Status::pass);
    lat.fact("d", a.degree()).fact("field", a.field()->to_string()).fact("points", static_cast<long>(a.lattice().size()));
    std::map<int, long> counts;
    for (const auto& lp : a.lattice()) counts[lp.multiplicity]++;
    for (const auto& [m, n] : counts) lat.fact("mult" + std::to_string(m), n);
    lat.fact("tau", a.tau()).fact("max_mult", a.max_multiplicity());
    if (a.is_pencil()) {
      r.add("syzygy", Status::hypothesis_not_met, "pencil");
      return;
    }
    lat.fact("supersolvable", a.is_supersolvable() ? "yes" : "no");

    SyzygyModule m(a.defining_poly(), opt.max_degree);
    const auto prof = syzygy_profile(m);
    auto& syz = r.add("syzygy", Status::pass);
    syz.fact("dims", join_ints(prof.dims)).fact("mdr", prof.mdr).fact("generators", join_ints(prof.gen_degrees));
    syz.fact("relations", join_ints(prof.rel_degrees)).fact("epsilons", join_ints(prof.epsilons));
    syz.fact("sigma", prof.sigma ? std::to_string(*prof.sigma) : "none");
    const auto fr = is_free(a, m);
    syz.fact("free", fr.free ? "yes" : "no");
    if (fr.exponents) syz.fact("exponents", std::to_string(fr.exponents->first) + "," + std::to_string(fr.exponents->second));
    r.add("nhilbert", Status::pass).fact("n", join_longs(n_hilbert(m, a.tau())));

    const Derivation rho = minimal_syzygy(m);
    r.add("rho", Status::pass).fact("rho", rho.to_string());
    for (std::size_t p = 0; p < a.lattice().size(); ++p) {
      const auto ld = local_derivation(a, p);
      const HomPoly g = g_p(a, rho, p);
      r.add("point " + ld.point.point.to_string(), Status::pass)
          .fact("m", ld.point.multiplicity)
          .fact("local_derivation", ld.deriv.to_string())
          .fact("g_p", g.to_string())
          .fact("unconnected", static_cast<long>(a.unconnected_points(p).size()));
    }
    const auto c = min_cover(a);
    std::string w, w0;
    for (const auto& l : c.witness) w += (w.empty() ? "" : "; ") + l.to_string();
    for (const auto& l : c.witness_a) w0 += (w0.empty() ? "" : "; ") + l.to_string();
    r.add("cover", Status::pass).fact("N", c.N).fact("N0", c.N0).fact("witness", w).fact("witness_in_A", w0);
    r.merge(conjecture_check(a, m, c));
  });
  r.set_seconds(secs);
  return r;
}

}  // namespace linarr

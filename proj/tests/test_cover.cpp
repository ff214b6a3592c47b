#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "linarr/cover.hpp"
#include "linarr/harness.hpp"
#include "oracles.hpp"

using namespace linarr;

namespace {

bool passes(const Report& r) { return r.overall() == Status::pass; }

std::size_t point_index(const Arrangement& a, const ProjPoint& p) {
  auto i = a.find_point(p);
  REQUIRE(i.has_value());
  return *i;
}

bool has_check(const Report& r, const std::string& id, Status s) {
  for (const auto& c : r.checks())
    if (c.id == id && c.status == s) return true;
  return false;
}

// Every multiple point lies on one of the lines.
bool covers_all(const Arrangement& a, const std::vector<LinearForm>& lines) {
  for (const auto& lp : a.lattice()) {
    bool on = false;
    for (const auto& l : lines) on = on || l.contains(lp.point);
    if (!on) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("set cover on small explicit instances") {
  auto r = solve_set_cover(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  CHECK(r.size == 2);
  CHECK(r.chosen == std::vector<std::size_t>{0, 1});
  r = solve_set_cover(5, {{0, 1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(r.size == 2);
  CHECK(r.chosen == std::vector<std::size_t>{0, 2});
  r = solve_set_cover(3, {{0}, {1}, {2}});
  CHECK(r.size == 3);
  CHECK(solve_set_cover(0, {}).size == 0);
  CHECK_THROWS(solve_set_cover(2, {{0}}));
}

TEST_CASE("set cover agrees with subset enumeration on random instances") {
  std::mt19937_64 g(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t np = 3 + trial % 9, ns = 3 + trial % 7;
    std::vector<std::vector<std::size_t>> sets(ns);
    std::vector<std::vector<bool>> bits(ns, std::vector<bool>(np, false));
    std::bernoulli_distribution keep(0.35);
    for (std::size_t p = 0; p < np; ++p) {
      bool any = false;
      for (std::size_t s = 0; s < ns; ++s)
        if (keep(g)) {
          sets[s].push_back(p);
          bits[s][p] = any = true;
        }
      if (!any) {
        sets[p % ns].push_back(p);
        bits[p % ns][p] = true;
      }
    }
    const auto r = solve_set_cover(np, sets);
    CHECK(r.size == oracle::min_subset_cover(bits, np, static_cast<int>(ns)));
    std::set<std::size_t> covered;
    for (auto s : r.chosen) covered.insert(sets[s].begin(), sets[s].end());
    CHECK(covered.size() == np);
  }
}

TEST_CASE("cover numbers of the small catalog") {
  const auto tri = min_cover(build_catalog("TRIANGLE"));
  CHECK(tri.N == 2);
  CHECK(tri.N0 == 2);
  const auto f3 = min_cover(build_catalog("F3"));
  CHECK(f3.N == 3);
  CHECK(f3.N0 == 3);
  const auto ssv = min_cover(build_catalog("SSV"));
  CHECK(ssv.N == 3);
  CHECK(ssv.N0 == 3);
  auto akx = build_catalog("AKX(2)");
  const auto ca = min_cover(akx);
  CHECK(ca.N == 3);
  CHECK(ca.N == SyzygyModule(akx.defining_poly()).mdr());
}

TEST_CASE("Hessian: five lines suffice but not inside the arrangement") {
  auto a = build_catalog("HESSIAN");
  const auto c = min_cover(a);
  CHECK(c.N == 5);
  CHECK(c.N0 == 8);
  CHECK(c.N0 >= 6);
  CHECK(covers_all(a, c.witness));
  CHECK(covers_all(a, c.witness_a));
  for (const auto& l : c.witness_a) CHECK(a.has_line(l));
  SyzygyModule m(a.defining_poly());
  CHECK(passes(conjecture_check(a, m, c)));
}

TEST_CASE("cover numbers agree with the subset oracle on random arrangements") {
  for (std::uint64_t s = 1; s <= 25; ++s) {
    auto a = random_arrangement(s, 3 + s % 4, 2);
    const auto c = min_cover(a);
    const auto o = oracle::covers(a.lines());
    CHECK(c.N == o.N);
    CHECK(c.N0 == o.N0);
    CHECK(static_cast<int>(c.witness.size()) == c.N);
    CHECK(static_cast<int>(c.witness_a.size()) == c.N0);
    CHECK(covers_all(a, c.witness));
    CHECK(covers_all(a, c.witness_a));
    CHECK(std::is_sorted(c.witness.begin(), c.witness.end()));
  }
}

TEST_CASE("first exponent bounds the cover number") {
  std::vector<Arrangement> arrs;
  for (const char* name : {"TRIANGLE", "F3", "SSV", "MONO(3)", "AKX(3)", "PENCILS(3,4)", "GENERIC(6)", "ONE_TRIPLE(6)",
                           "PLUS_ONE"})
    arrs.push_back(build_catalog(name));
  for (std::uint64_t s = 1; s <= 20; ++s) arrs.push_back(random_arrangement(200 + s, 4 + s % 4, 3));
  for (const auto& a : arrs) {
    SyzygyModule m(a.defining_poly());
    const auto r = conjecture_check(a, m, min_cover(a));
    CHECK(r.overall() == Status::pass);
  }
}

TEST_CASE("covers inside the arrangement for the listed types") {
  auto f3 = build_catalog("F3");
  CHECK(passes(thm100_check(f3, SyzygyModule(f3.defining_poly()), min_cover(f3))));

  auto nodal = build_catalog("GENERIC(5)");
  const auto rn = thm100_check(nodal, SyzygyModule(nodal.defining_poly()), min_cover(nodal));
  CHECK(passes(rn));
  CHECK(has_check(rn, "thm100.1", Status::pass));

  auto one = build_catalog("ONE_TRIPLE(6)");
  const auto ro = thm100_check(one, SyzygyModule(one.defining_poly()), min_cover(one));
  CHECK(passes(ro));
  CHECK(has_check(ro, "thm100.2-mdr", Status::pass));
  CHECK(has_check(ro, "thm100.2-N", Status::pass));
}

TEST_CASE("Hessian: unconnected points lie on y = z") {
  auto a = build_catalog("HESSIAN");
  SyzygyModule m(a.defining_poly());
  const auto l = LinearForm::make(a.field(), 0, 1, -1);
  int found = 0;
  for (std::size_t p = 0; p < a.lattice().size(); ++p) {
    if (a.lattice()[p].multiplicity != 4) continue;
    const auto Q = unconnected_set(a, p);
    if (Q.empty() || !std::all_of(Q.begin(), Q.end(), [&](std::size_t q) { return l.contains(a.lattice()[q].point); }))
      continue;
    ++found;
    long s = 0;
    for (auto q : Q) s += a.lattice()[q].multiplicity - 1;
    CHECK(s == 4);
    CHECK(s == a.degree() - 2 * a.lattice()[p].multiplicity);
    const Report r = thm1000_report(a, m, p);
    CHECK(passes(r));
    CHECK(has_check(r, "thm1000.2-free", Status::pass));
    CHECK(passes(rkex10_bounds(a, p, l)));
    CHECK(passes(tau_case_identity(a, p, l)));
  }
  CHECK(found >= 1);
}

TEST_CASE("plus-one generated arrangement from the unconnected points") {
  auto a = build_catalog("PLUS_ONE");
  SyzygyModule m(a.defining_poly());
  bool saw = false;
  for (std::size_t p = 0; p < a.lattice().size(); ++p) {
    const Report r = thm1000_report(a, m, p);
    CHECK(r.ok());
    saw = saw || has_check(r, "thm1000.2-pog", Status::pass);
  }
  CHECK(saw);
}

TEST_CASE("Bezout bounds for points on a line") {
  auto f3 = build_catalog("F3");
  auto p = point_index(f3, ProjPoint::make(f3.field(), 0, 1, 1));
  CHECK(unconnected_set(f3, p).size() == 2);
  const Report r = rkex10_bounds(f3, p, LinearForm::make(f3.field(), 1, -1, -1));
  CHECK(passes(r));
  CHECK(r.checks().front().facts.back().value == "yes");
  CHECK_THROWS_AS(rkex10_bounds(f3, p, LinearForm::make(f3.field(), 1, 0, 0)), MathError);

  for (int k : {2, 3}) {
    auto a = build_catalog("AKX(" + std::to_string(k) + ")");
    auto pa = point_index(a, ProjPoint::make(a.field(), 0, 0, 1));
    CHECK(passes(rkex10_bounds(a, pa, LinearForm::make(a.field(), 0, 1, -1))));
    CHECK(passes(rkex10_bounds(a, pa, LinearForm::make(a.field(), 0, 1, 2))));
  }
}

TEST_CASE("Euler number through the projection from a point of maximal multiplicity") {
  auto h = build_catalog("HESSIAN");
  for (std::size_t p = 0; p < h.lattice().size(); ++p) {
    const Report r = lem10_euler(h, p);
    if (h.lattice()[p].multiplicity != 4) {
      CHECK(r.overall() == Status::hypothesis_not_met);
      continue;
    }
    CHECK(passes(r));
    CHECK(r.checks().front().facts.front().value == "4");
  }
  for (std::uint64_t s = 1; s <= 15; ++s) {
    auto a = random_arrangement(300 + s, 4 + s % 4, 2);
    for (std::size_t p = 0; p < a.lattice().size(); ++p)
      if (a.lattice()[p].multiplicity == a.max_multiplicity()) CHECK(passes(lem10_euler(a, p)));
  }
}

TEST_CASE("three positions of the line through the unconnected point") {
  for (int k : {2, 3}) {
    auto a = build_catalog("AKX(" + std::to_string(k) + ")");
    const auto& K = a.field();
    const long d = a.degree();
    auto p = point_index(a, ProjPoint::make(K, 0, 0, 1));
    const long m = a.lattice()[p].multiplicity;
    CHECK(d == 3 * k + 1);
    CHECK(m == k + 1);
    const auto Q = unconnected_set(a, p);
    REQUIRE(Q.size() == 1);
    CHECK(a.lattice()[Q[0]].point == ProjPoint::make(K, 1, 0, 0));
    CHECK(a.lattice()[Q[0]].multiplicity - 1 == d - 2 * m);

    // The correction sum (m_q - 1) - (d - 2m) vanishes here.
    const long tau = oracle::tau(a.lines());
    CHECK(tau == (d - 1) * (d - 1) - m * (d - m - 1));

    const auto case1 = tau_case_identity(a, p, LinearForm::make(K, 0, 1, 2));
    CHECK(passes(case1));
    CHECK(has_check(case1, "tau.case1", Status::pass));
    const auto case2 = tau_case_identity(a, p, LinearForm::make(K, 0, 1, 0));
    CHECK(passes(case2));
    CHECK(has_check(case2, "tau.case2", Status::pass));
    const auto case3 = tau_case_identity(a, p, LinearForm::make(K, 0, 1, -1));
    CHECK(passes(case3));
    CHECK(has_check(case3, "tau.case3", Status::pass));
  }
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

#include "linarr/harness.hpp"
#include "linarr/syzygy.hpp"
#include "oracles.hpp"

using namespace linarr;

namespace {

const Check* find_check(const Report& r, const std::string& id) {
  for (const auto& c : r.checks())
    if (c.id == id) return &c;
  return nullptr;
}

std::string fact_of(const Check& c, const std::string& key) {
  for (const auto& f : c.facts)
    if (f.key == key) return f.value;
  return "";
}

}  // namespace

TEST_CASE("catalog names and parameters") {
  std::set<std::string> names;
  for (const auto& e : catalog()) names.insert(e.name);
  CHECK(names.size() == catalog().size());
  CHECK(names.size() >= 10);
  for (const char* n : {"TRIANGLE", "F3", "MONO", "AKX", "HESSIAN", "SSV", "PENCILS", "ZIEGLER"}) CHECK(names.count(n));

  const auto p = parse_catalog_name("PENCILS(3, 5)");
  CHECK(p.name == "PENCILS");
  CHECK(p.params == std::vector<int>{3, 5});
  CHECK(parse_catalog_name("F3").params.empty());
  CHECK_THROWS_AS(parse_catalog_name("MONO(4"), ParseError);
  CHECK_THROWS_AS(parse_catalog_name("MONO(a)"), ParseError);
  CHECK_THROWS_AS(build_catalog("NOPE"), ParseError);
  CHECK_THROWS_AS(build_catalog("F3(2)"), ParseError);
  CHECK_THROWS_AS(build_catalog("ZIEGLER"), MathError);

  CHECK(build_catalog("MONO").degree() == 12);
  CHECK(build_catalog("MONO(3)").degree() == 9);
  CHECK(build_catalog("AKX(3)").degree() == 10);
  CHECK(build_catalog("PENCILS(3,4)").degree() == 7);
  CHECK(build_catalog("HESSIAN").degree() == 12);
  CHECK(build_catalog("SSV").degree() == 6);
}

TEST_CASE("every shipped catalog entry matches its expected values") {
  for (const auto& e : catalog()) {
    if (e.external) continue;
    const Report r = check_expected(e.name);
    CHECK_MESSAGE(r.overall() == Status::pass, e.name << "\n" << r.text());
  }
  for (const char* name : {"MONO(5)", "AKX(3)", "PENCILS(2,5)", "PENCILS_JOINED(4,3)", "GENERIC(6)", "ONE_TRIPLE(7)"}) {
    const Report r = check_expected(name);
    CHECK_MESSAGE(r.overall() == Status::pass, name << "\n" << r.text());
  }
}

TEST_CASE("published and computed values are labelled") {
  bool published = false, computed = false;
  for (const auto& v : catalog_expected("F3")) {
    published = published || v.origin == Origin::published;
    computed = computed || v.origin == Origin::computed;
  }
  CHECK(published);
  CHECK(computed);
  CHECK(to_string(Origin::published) == "published");
}

TEST_CASE("random arrangements are deterministic and valid") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    auto a = random_arrangement(s, 6, 3);
    auto b = random_arrangement(s, 6, 3);
    CHECK(a.lines() == b.lines());
    CHECK(a.degree() == 6);
    CHECK_FALSE(a.is_pencil());
    CHECK(a.tau() == oracle::tau(a.lines()));
  }
  CHECK_FALSE(random_arrangement(1, 6, 3).lines() == random_arrangement(2, 6, 3).lines());
  CHECK_THROWS_AS(random_arrangement(1, 2, 3), MathError);
  CHECK_THROWS_AS(random_arrangement(1, 30, 1), MathError);
}

TEST_CASE("suite dispatch") {
  auto f3 = build_catalog("F3");
  CHECK(verify(f3, "thm2").overall() == Status::pass);
  CHECK(verify(f3, "thm3").overall() == Status::hypothesis_not_met);
  CHECK_THROWS_AS(verify(f3, "nope"), std::invalid_argument);
  CHECK(suite_ids().back() == "full");

  auto h = build_catalog("HESSIAN");
  const Report c = verify(h, "conj10");
  CHECK(c.overall() == Status::pass);
  const Check* chk = find_check(c, "conj10");
  REQUIRE(chk);
  CHECK(fact_of(*chk, "N") == "5");

  auto q = rational_field();
  Arrangement pencil(q, {LinearForm::make(q, 1, 0, 0), LinearForm::make(q, 0, 1, 0), LinearForm::make(q, 1, 1, 0)});
  CHECK(verify(pencil, "thm2").overall() == Status::hypothesis_not_met);
}

TEST_CASE("full suite on small arrangements") {
  for (const char* name : {"TRIANGLE", "F3", "SSV", "PENCILS(2,2)", "PLUS_ONE"}) {
    const Report r = verify(build_catalog(name), "full");
    CHECK_MESSAGE(r.ok(), name << "\n" << r.text());
    for (const auto& c : r.checks()) CHECK_MESSAGE(c.status != Status::inconclusive, name << " " << c.id);
  }
}

TEST_CASE("targets from files and analysis") {
  const std::string path = "linarr_test_target.txt";
  {
    std::ofstream out(path);
    out << "# two pencils\nfield: t - 1\n1, 0, 0\n1, -1, 0\n0, 1, -1\n0, 1, -2\n";
  }
  auto a = load_target(path);
  std::remove(path.c_str());
  CHECK(a.degree() == 4);
  CHECK_THROWS_AS(load_target("no/such/file"), ParseError);
  CHECK(load_target("catalog:F3").lines() == build_catalog("F3").lines());

  const Report r = analyze(build_catalog("F3"));
  const Check* syz = find_check(r, "syzygy");
  REQUIRE(syz);
  CHECK(fact_of(*syz, "free") == "yes");
  CHECK(fact_of(*syz, "exponents") == "2,3");
  const Check* cov = find_check(r, "cover");
  REQUIRE(cov);
  CHECK(fact_of(*cov, "N") == "3");
  CHECK(r.records().find("key=tau value=19") != std::string::npos);
}

TEST_CASE("the lattice-isomorphic pair referee") {
  // Two generic sextics share the lattice and D_0(f)_5, so they are no
  // counterexample pair; different lattices are rejected outright.
  auto g = build_catalog("GENERIC(6)");
  auto q = rational_field();
  Arrangement other(q, {LinearForm::make(q, 1, 0, 0), LinearForm::make(q, 0, 1, 0), LinearForm::make(q, 0, 0, 1),
                        LinearForm::make(q, 1, 1, 1), LinearForm::make(q, 1, 2, 3), LinearForm::make(q, 1, 3, 7)});
  REQUIRE(other.max_multiplicity() == 2);
  const Report same = verify_ziegler_pair(g, other);
  CHECK(find_check(same, "thmD2.lattice")->status == Status::pass);
  CHECK(find_check(same, "thmD2.dim5")->status == Status::fail);
  CHECK(find_check(same, "thmD2.tau")->status == Status::pass);
  const Report diff = verify_ziegler_pair(g, build_catalog("SSV"));
  CHECK(find_check(diff, "thmD2.lattice")->status == Status::fail);
}

TEST_CASE("randomized suites over 100 seeds") {
  const std::vector<std::string> suites{"thmD", "corD", "cor20",  "thm1",  "thm2",     "thmG-span", "thm1G-exact",
                                        "propG1", "propG2", "eqG7", "eqG8", "propthm10", "conj10"};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int d = 3 + static_cast<int>(seed % 6);
    auto a = random_arrangement(seed, d, 3);
    for (const auto& s : suites) {
      const Report r = verify(a, s);
      CHECK_MESSAGE(r.overall() != Status::fail, "seed " << seed << " suite " << s << "\n" << r.text());
      CHECK_MESSAGE(r.overall() != Status::inconclusive, "seed " << seed << " suite " << s);
    }
    // is_free throws when the generator count and the tau criterion disagree.
    CHECK_NOTHROW(is_free(a, SyzygyModule(a.defining_poly())));
  }
}

TEST_CASE("a random heptagon passes every applicable suite") {
  const Report r = verify(random_arrangement(2, 7, 5), "full");
  CHECK(r.ok());
  for (const auto& c : r.checks()) CHECK_MESSAGE(c.status != Status::inconclusive, c.id);
}

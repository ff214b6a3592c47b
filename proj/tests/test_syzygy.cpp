#include <doctest.h>

#include "linarr/harness.hpp"
#include "linarr/syzygy.hpp"
#include "oracles.hpp"

using namespace linarr;

namespace {

bool all_pass(const Report& r) { return r.overall() == Status::pass; }

// First seeds giving non-free random arrangements of the given degree.
std::vector<Arrangement> non_free_randoms(int d, int count) {
  std::vector<Arrangement> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
    auto a = random_arrangement(seed, d, 3);
    SyzygyModule m(a.defining_poly());
    if (!is_free(a, m).free) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("graded pieces are syzygies and match the dense oracle") {
  std::vector<Arrangement> arrs{build_catalog("TRIANGLE"), build_catalog("F3"), build_catalog("SSV"),
                                build_catalog("PENCILS(2,2)"), build_catalog("AKX(2)"), build_catalog("MONO(3)")};
  for (std::uint64_t s = 1; s <= 12; ++s) arrs.push_back(random_arrangement(s, 3 + s % 5, 3));
  for (const auto& a : arrs) {
    const HomPoly f = a.defining_poly();
    SyzygyModule m(f);
    for (int k = 0; k <= m.max_degree(); ++k) {
      CHECK(static_cast<std::size_t>(m.dim(k)) == oracle::syzygy_dim(f, k));
      for (const auto& delta : m.basis(k)) CHECK(delta.apply(f).is_zero());
    }
  }
}

TEST_CASE("dimensions from the examples") {
  SyzygyModule tri(build_catalog("TRIANGLE").defining_poly());
  CHECK(tri.dim(0) == 0);
  CHECK(tri.dim(1) == 2);
  CHECK(tri.mdr() == 1);
  SyzygyModule f3(build_catalog("F3").defining_poly());
  CHECK(f3.dim(4) == 9);
  CHECK(f3.dim(3) == 4);
  CHECK(f3.generator_degrees() == std::vector<int>{2, 3});
  SyzygyModule gen4(build_catalog("GENERIC(4)").defining_poly());
  CHECK(gen4.mdr() == 2);
  CHECK_THROWS_AS(f3.basis(f3.max_degree() + 1), MathError);
}

TEST_CASE("Hessian module") {
  auto a = build_catalog("HESSIAN");
  SyzygyModule m(a.defining_poly());
  CHECK(m.generator_degrees() == std::vector<int>{4, 7});
  CHECK(m.dim(9) == 27);
  CHECK(oracle::syzygy_dim(a.defining_poly(), 9) == 27);
  const auto fr = is_free(a, m);
  CHECK(fr.free);
  CHECK(fr.exponents == std::make_pair(4, 7));
  CHECK(relation_degrees(m).degrees.empty());
}

TEST_CASE("two pencils: generators, relation, sigma, Jacobian module") {
  auto a = build_catalog("PENCILS(2,2)");
  SyzygyModule m(a.defining_poly());
  CHECK(m.generator_degrees() == std::vector<int>{2, 2, 2});
  const auto rel = relation_degrees(m);
  CHECK(rel.degrees == std::vector<int>{3});
  CHECK(rel.epsilons == std::vector<int>{1});
  CHECK(sigma_from_resolution(m) == 3);
  CHECK_FALSE(is_free(a, m).free);
  const auto n = n_hilbert(m, a.tau());
  CHECK(n == oracle::saturation_hilbert(a.defining_poly()));
  CHECK(n == std::vector<long>{0, 0, 0, 1, 0, 0, 0});
  CHECK(all_pass(n_hilbert_check(a, m)));
}

TEST_CASE("free arrangements have vanishing Jacobian module") {
  auto a = build_catalog("F3");
  SyzygyModule m(a.defining_poly());
  const auto n = n_hilbert(m, a.tau());
  CHECK(n == std::vector<long>(13, 0));
  CHECK(oracle::saturation_hilbert(a.defining_poly()) == n);
  CHECK_THROWS_WITH_AS(sigma_from_resolution(m), "sigma undefined (N(f)=0)", MathError);
}

TEST_CASE("random non-free quintic against the saturation oracle") {
  for (const auto& a : non_free_randoms(5, 1)) {
    SyzygyModule m(a.defining_poly());
    const auto n = n_hilbert(m, a.tau());
    CHECK(n == oracle::saturation_hilbert(a.defining_poly()));
    long first = -1;
    for (std::size_t j = 0; j < n.size() && first < 0; ++j)
      if (n[j] != 0) first = static_cast<long>(j);
    CHECK(first == sigma_from_resolution(m));
  }
}

TEST_CASE("relation degrees exceed the generator degrees") {
  for (int d : {5, 6, 7}) {
    for (const auto& a : non_free_randoms(d, 2)) {
      SyzygyModule m(a.defining_poly());
      const auto rel = relation_degrees(m);
      CHECK(rel.degrees.size() + 2 == m.generators().size());
      for (int e : rel.epsilons) CHECK(e >= 1);
      CHECK(sigma_from_resolution(m) >= d - 1);
    }
  }
  SyzygyModule akx(build_catalog("AKX(2)").defining_poly());
  for (int e : relation_degrees(akx).epsilons) CHECK(e >= 1);
}

TEST_CASE("combinatorial dimensions beyond the computed range") {
  auto a = build_catalog("SSV");
  SyzygyModule small(a.defining_poly());
  for (int j = a.degree(); j <= a.degree() + 2; ++j)
    CHECK(dim_extended(small, a.tau(), j) == static_cast<long>(oracle::syzygy_dim(a.defining_poly(), j)));
}

TEST_CASE("dimension identities and lower bounds on catalog and random input") {
  std::vector<Arrangement> arrs{build_catalog("F3"),      build_catalog("SSV"),          build_catalog("MONO(3)"),
                                build_catalog("AKX(2)"),  build_catalog("PENCILS(3,4)"), build_catalog("GENERIC(6)"),
                                build_catalog("PLUS_ONE"), build_catalog("TRIANGLE")};
  for (std::uint64_t s = 1; s <= 15; ++s) arrs.push_back(random_arrangement(100 + s, 3 + s % 6, 3));
  for (const auto& a : arrs) {
    SyzygyModule m(a.defining_poly());
    CHECK(all_pass(dims_theorem_check(a, m)));
    CHECK(lower_bound_check(a, m).ok());
    CHECK(n_hilbert_check(a, m).ok());
    const auto fr = is_free(a, m);
    const int d1 = m.mdr();
    const long d = a.degree();
    if (fr.free) CHECK(a.tau() == (d - 1) * (d - 1) - d1 * (d - 1 - d1));
  }
}

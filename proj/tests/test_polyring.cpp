#include <doctest.h>

#include "generators.hpp"
#include "linarr/polyring.hpp"

using namespace linarr;

namespace {

struct Vars {
  FieldPtr k;
  HomPoly x, y, z;
  explicit Vars(FieldPtr f)
      : k(f), x(HomPoly::variable(f, 3, 0)), y(HomPoly::variable(f, 3, 1)), z(HomPoly::variable(f, 3, 2)) {}
};

}  // namespace

TEST_CASE("monomial enumeration") {
  auto m = monomials(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == Monomial{2, 0, 0});
  CHECK(m.back() == Monomial{0, 0, 2});
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(monomial_index(3, m[i]) == i);
  CHECK(num_monomials(3, 4) == 15);
  CHECK(num_monomials(2, 4) == 5);
  CHECK(num_monomials(3, -1) == 0);
}

TEST_CASE("products, powers and rendering") {
  Vars v(rational_field());
  HomPoly p = (v.x - v.y) * (v.x + v.y);
  CHECK(p == v.x.pow(2) - v.y.pow(2));
  CHECK(p.degree() == 2);
  CHECK((v.x * v.x * v.y * FieldScalar(v.k, 2) - v.z.pow(3)).to_string() == "2*x^2*y - z^3");
  CHECK_THROWS_AS(v.x + v.x * v.y, MathError);
}

TEST_CASE("exact division") {
  Vars v(make_cyclotomic(3));
  auto t = FieldScalar::generator(v.k);
  HomPoly l = v.x + v.y * t;
  HomPoly q = v.y * v.z - v.x * v.x;
  CHECK(exact_div(l * q, l) == q);
  CHECK(exact_div(l * q, q) == l);
  CHECK_THROWS_AS(exact_div(q, l), MathError);
}

TEST_CASE("Euler identity on random forms") {
  std::mt19937_64 g(3);
  auto k = make_cyclotomic(4);
  auto e = Derivation::euler(k);
  for (int i = 0; i < 20; ++i) {
    const int d = 1 + i % 5;
    auto f = gen::poly(g, k, d);
    CHECK(e.apply(f) == f * Rational(d));
  }
}

TEST_CASE("product rule for derivations") {
  std::mt19937_64 g(4);
  auto k = rational_field();
  for (int i = 0; i < 15; ++i) {
    Derivation D(gen::poly(g, k, 2), gen::poly(g, k, 2), gen::poly(g, k, 2));
    auto f = gen::poly(g, k, 2), h = gen::poly(g, k, 3);
    CHECK(D.apply(f * h) == D.apply(f) * h + f * D.apply(h));
  }
}

TEST_CASE("evaluation and linear substitution") {
  Vars v(rational_field());
  auto c = [&](long n) { return FieldScalar(v.k, n); };
  HomPoly f = v.x * v.y - v.z.pow(2);
  CHECK(f.eval(c(2), c(3), c(1)) == c(5));
  Matrix3 M{{c(0), c(1), c(0), c(1), c(0), c(0), c(0), c(0), c(1)}};
  CHECK(substitute_linear(f, M) == f);
  Matrix3 S{{c(1), c(1), c(0), c(0), c(1), c(0), c(0), c(0), c(1)}};
  CHECK(substitute_linear(v.x, S) == v.x + v.y);
  CHECK((S * S.inverse()).e == Matrix3::identity(v.k).e);
  CHECK(S.det() == c(1));
}

TEST_CASE("restriction to x = 0 and binary roots") {
  Vars v(rational_field());
  HomPoly g = (v.y - v.z).pow(2) * v.z * (v.x + v.y);
  HomPoly r = g.restrict_x0();
  CHECK(r.nvars() == 2);
  CHECK(binary_distinct_roots(r) == 3);
  CHECK(binary_distinct_roots((v.y.pow(3)).restrict_x0()) == 1);
  CHECK(r.lift3() == (v.y - v.z).pow(2) * v.z * v.y);
}

TEST_CASE("proportionality") {
  Vars v(make_cyclotomic(3));
  auto t = FieldScalar::generator(v.k);
  CHECK(proportional(v.x * t, v.x));
  CHECK_FALSE(proportional(v.x, v.y));
  CHECK_FALSE(proportional(v.x, v.x - v.x));
}

#include <doctest.h>

#include "generators.hpp"
#include "linarr/scalars.hpp"

using namespace linarr;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<Rational>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), MathError);
}

TEST_CASE("roots of unity have the right order") {
  for (int n : {3, 4, 5, 6, 8}) {
    auto k = make_cyclotomic(n);
    auto z = FieldScalar::generator(k);
    CHECK(z.pow(n).is_one());
    for (int j = 1; j < n; ++j) CHECK_FALSE(z.pow(j).is_one());
  }
}

TEST_CASE("field arithmetic in Q(zeta_3)") {
  auto k = make_cyclotomic(3);
  auto t = FieldScalar::generator(k);
  CHECK(t * t == -t - FieldScalar(k, 1));
  CHECK((t * t + t + FieldScalar(k, 1)).is_zero());
  CHECK(t.inverse() == t * t);
  CHECK_THROWS_AS(FieldScalar(k).inverse(), MathError);
  CHECK_THROWS_AS(t / FieldScalar(k), MathError);
}

TEST_CASE("rationals are stored canonically") {
  auto q = rational_field();
  CHECK(FieldScalar(q, Rational(3, 6)) == FieldScalar(q, Rational(1, 2)));
  CHECK(FieldScalar(q, 1) * Rational(3, 6) == FieldScalar(q, Rational(1, 2)));
  CHECK(FieldScalar(q, std::vector<Rational>{Rational(4, 8)}) == FieldScalar(q, Rational(1, 2)));
}

TEST_CASE("mixing fields is an error") {
  auto a = FieldScalar::generator(make_cyclotomic(3));
  auto b = FieldScalar::generator(make_cyclotomic(4));
  CHECK_THROWS_AS(a + b, MathError);
  CHECK_THROWS_AS(make_field({Rational(1), Rational(2)}), MathError);
}

TEST_CASE("scalar literals round trip") {
  auto k = make_cyclotomic(5);
  for (const char* text : {"1/2*t^2 - 3", "t + 1", "-2/5", "0", "t^3"}) {
    auto s = parse_scalar(text, k);
    CHECK(parse_scalar(s.to_string(), k) == s);
  }
  CHECK(parse_scalar("t^5", k).is_one());
  CHECK(parse_univariate("3*t^2 - t") == std::vector<Rational>{0, -1, 3});
  CHECK_THROWS_AS(parse_univariate("3*s"), ParseError);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 g(11);
  for (int n : {1, 3, 4, 5}) {
    auto k = make_cyclotomic(n);
    for (int i = 0; i < 40; ++i) {
      auto a = gen::scalar(g, k), b = gen::scalar(g, k), c = gen::scalar(g, k);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      CHECK(a * b == b * a);
      if (!b.is_zero()) {
        CHECK((a / b) * b == a);
        CHECK(b * b.inverse() == FieldScalar(k, 1));
      }
    }
  }
}

#pragma once

// Small deterministic generators for property tests.

#include <random>
#include <vector>

#include "linarr/polyring.hpp"
#include "linarr/scalars.hpp"

namespace gen {

inline linarr::Rational small_rational(std::mt19937_64& g, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  linarr::Rational r(num(g), den(g));
  r.canonicalize();
  return r;
}

inline linarr::FieldScalar scalar(std::mt19937_64& g, const linarr::FieldPtr& k, int bound = 9) {
  std::vector<linarr::Rational> c(k->degree());
  for (auto& x : c) x = small_rational(g, bound);
  return linarr::FieldScalar(k, c);
}

inline linarr::FieldScalar nonzero_scalar(std::mt19937_64& g, const linarr::FieldPtr& k) {
  for (;;) {
    auto s = scalar(g, k);
    if (!s.is_zero()) return s;
  }
}

inline linarr::HomPoly poly(std::mt19937_64& g, const linarr::FieldPtr& k, int degree, int nvars = 3) {
  std::vector<linarr::FieldScalar> c;
  std::bernoulli_distribution keep(0.6);
  for (std::size_t i = 0; i < linarr::num_monomials(nvars, degree); ++i)
    c.push_back(keep(g) ? scalar(g, k, 5) : linarr::FieldScalar(k));
  return linarr::HomPoly::from_coeffs(k, nvars, degree, c);
}

}  // namespace gen

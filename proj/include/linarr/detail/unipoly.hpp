#pragma once

// Dense univariate polynomials over an exact field, coefficients low to high.
// T is mpq_class or a type with an is_zero() member.

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace linarr::detail {

inline bool is_zero(const mpq_class& r) { return sgn(r) == 0; }

template <class T>
bool is_zero(const T& x) {
  return x.is_zero();
}

template <class T>
void trim(std::vector<T>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class T>
int degree(const std::vector<T>& p) {
  return static_cast<int>(p.size()) - 1;
}

/// (quotient, remainder) of a by b; b must be trimmed and nonzero.
template <class T>
std::pair<std::vector<T>, std::vector<T>> divmod(std::vector<T> a, const std::vector<T>& b, const T& zero) {
  trim(a);
  std::vector<T> q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, zero);
  const T& lead = b.back();
  for (int i = degree(a); i >= degree(b); --i) {
    if (is_zero(a[i])) continue;
    T c = a[i] / lead;
    int shift = i - degree(b);
    q[shift] = c;
    for (int j = 0; j <= degree(b); ++j) a[shift + j] = a[shift + j] - c * b[j];
  }
  a.resize(b.size() - 1, zero);
  trim(a);
  trim(q);
  return {q, a};
}

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class T>
std::vector<T> sub(std::vector<T> a, const std::vector<T>& b, const T& zero) {
  if (a.size() < b.size()) a.resize(b.size(), zero);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  trim(a);
  return a;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& a, const T& zero) {
  std::vector<T> r;
  for (std::size_t i = 1; i < a.size(); ++i) {
    T c = zero;
    for (std::size_t k = 0; k < i; ++k) c = c + a[i];
    r.push_back(c);
  }
  trim(r);
  return r;
}

/// Monic-free gcd (unnormalized) by the Euclidean algorithm.
template <class T>
std::vector<T> gcd(std::vector<T> a, std::vector<T> b, const T& zero) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b, zero).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace linarr::detail

#include "linarr/linalg.hpp"

#include <algorithm>

namespace linarr {

namespace {

using IntRow = std::vector<mpz_class>;

// Integral model of K: coordinates in the basis 1, s, ..., s^{n-1}, s = D*t.
struct Arith {
  int n = 1;
  Integer D = 1;
  std::vector<Integer> dpow;              // D^i
  std::vector<std::vector<Integer>> red;  // s^{n+j} as a combination of 1..s^{n-1}
  FieldPtr scaled;                        // Q[s]/(m'), used for pivot inverses

  explicit Arith(const FieldPtr& field) {
    const auto& m = field->modulus();
    n = field->degree();
    for (const auto& c : m) D = lcm(D, Integer(c.get_den()));
    dpow.resize(2 * n);
    dpow[0] = 1;
    for (int i = 1; i < 2 * n; ++i) dpow[i] = dpow[i - 1] * D;
    std::vector<Integer> mp(n + 1);
    std::vector<Rational> mq(n + 1);
    for (int i = 0; i <= n; ++i) {
      Rational c = m[i] * Rational(dpow[n - i]);
      mp[i] = c.get_num();
      mq[i] = c;
    }
    // s^n = -sum_{i<n} mp[i] s^i; higher powers by shifting.
    std::vector<Integer> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = -mp[i];
    for (int j = 0; j + 1 < n; ++j) {
      red.push_back(cur);
      Integer top = cur[n - 1];
      for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < n; ++i) cur[i] -= top * mp[i];
    }
    if (n > 1) scaled = make_field(mq);
  }
};

bool elem_zero(const IntRow& v, std::size_t j, int n) {
  for (int k = 0; k < n; ++k)
    if (sgn(v[j * n + k]) != 0) return false;
  return true;
}

// out -= a * b in K (n > 1); tmp has room for 2n-1 entries.
void submul_elem(const Arith& ar, mpz_class* out, const mpz_class* a, const mpz_class* b, std::vector<mpz_class>& tmp) {
  const int n = ar.n;
  for (int i = 0; i < 2 * n - 1; ++i) tmp[i] = 0;
  for (int i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < n; ++j) mpz_addmul(tmp[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (int i = 0; i < n; ++i) out[i] -= tmp[i];
  for (int j = n; j < 2 * n - 1; ++j) {
    if (sgn(tmp[j]) == 0) continue;
    const auto& r = ar.red[j - n];
    for (int i = 0; i < n; ++i) mpz_submul(out[i].get_mpz_t(), tmp[j].get_mpz_t(), r[i].get_mpz_t());
  }
}

void remove_content(IntRow& v, std::size_t from = 0) {
  mpz_class g = 0;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (std::size_t i = from; i < v.size(); ++i)
    if (sgn(v[i]) != 0) mpz_divexact(v[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
}

struct Row {
  IntRow e;
  std::size_t pivot = 0;
  std::vector<std::size_t> nz;  // nonzero columns
};

}  // namespace

Vector zero_vector(const FieldPtr& field, std::size_t n) { return Vector(n, FieldScalar(field)); }

struct Echelon::Impl {
  FieldPtr field;
  std::size_t ncols;
  Arith ar;
  std::vector<Row> rows;
  std::vector<int> row_at;
  mutable std::vector<mpz_class> tmp;

  Impl(FieldPtr f, std::size_t nc) : field(std::move(f)), ncols(nc), ar(field), row_at(nc, -1) {
    tmp.resize(2 * ar.n);
  }

  IntRow to_internal(const Vector& v) const {
    if (v.size() != ncols) throw MathError("vector length mismatch");
    SparseVector sv;
    for (std::size_t j = 0; j < ncols; ++j)
      if (!v[j].is_zero() || !same_field(v[j].field(), field)) sv.emplace_back(j, v[j]);
    return to_internal(sv);
  }

  IntRow to_internal(const SparseVector& v) const {
    const int n = ar.n;
    IntRow out(ncols * n);
    Integer den = 1;
    std::vector<Rational> scaled(ncols * n);
    for (const auto& [j, x] : v) {
      if (j >= ncols) throw MathError("vector length mismatch");
      if (!same_field(x.field(), field)) throw MathError("field mismatch");
      const auto& c = x.coords();
      for (int k = 0; k < n; ++k) {
        if (sgn(c[k]) == 0) continue;
        Rational r = c[k] / Rational(ar.dpow[k]);
        scaled[j * n + k] += r;
      }
    }
    for (const auto& r : scaled)
      if (sgn(r) != 0) den = lcm(den, Integer(r.get_den()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (sgn(scaled[i]) == 0) continue;
      Rational r = scaled[i] * Rational(den);
      out[i] = r.get_num();
    }
    remove_content(out);
    return out;
  }

  // v := P'v - e' row, clearing v at row.pivot. Scaling starts at `from`.
  void eliminate(IntRow& v, const Row& row, std::size_t from) const {
    const int n = ar.n;
    const std::size_t c = row.pivot;
    const mpz_class& P = row.e[c * n];
    mpz_class g = P;
    for (int k = 0; k < n; ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[c * n + k].get_mpz_t());
    mpz_class Pp = P / g;
    std::vector<mpz_class> e(n);
    for (int k = 0; k < n; ++k) mpz_divexact(e[k].get_mpz_t(), v[c * n + k].get_mpz_t(), g.get_mpz_t());
    if (Pp != 1) {
      for (std::size_t i = from * n; i < v.size(); ++i)
        if (sgn(v[i]) != 0) v[i] *= Pp;
    }
    if (n == 1) {
      for (std::size_t j : row.nz) mpz_submul(v[j].get_mpz_t(), e[0].get_mpz_t(), row.e[j].get_mpz_t());
    } else {
      for (std::size_t j : row.nz) submul_elem(ar, &v[j * n], e.data(), &row.e[j * n], tmp);
    }
    remove_content(v, from * n);
  }

  // Reduces v against existing rows; returns the first column where v is
  // nonzero with no pivot row, or ncols when v reduces to zero.
  std::size_t reduce(IntRow& v) const {
    const int n = ar.n;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (elem_zero(v, c, n)) continue;
      int r = row_at[c];
      if (r < 0) return c;
      eliminate(v, rows[r], c);
    }
    return ncols;
  }

  void normalize_pivot(IntRow& v, std::size_t c) const {
    const int n = ar.n;
    bool rational = true;
    for (int k = 1; k < n; ++k)
      if (sgn(v[c * n + k]) != 0) rational = false;
    if (!rational) {
      // Multiply by an integral multiple of the pivot's inverse.
      std::vector<Rational> a(n);
      for (int k = 0; k < n; ++k) a[k] = Rational(v[c * n + k]);
      FieldScalar inv = FieldScalar(ar.scaled, a).inverse();
      Integer den = 1;
      for (const auto& q : inv.coords()) den = lcm(den, Integer(q.get_den()));
      std::vector<mpz_class> b(n);
      for (int k = 0; k < n; ++k) b[k] = Rational(inv.coords()[k] * Rational(den)).get_num();
      IntRow out(v.size());
      for (std::size_t j = c; j < ncols; ++j) {
        if (elem_zero(v, j, n)) continue;
        // out_j = -( -b * v_j )
        submul_elem(ar, &out[j * n], b.data(), &v[j * n], tmp);
        for (int k = 0; k < n; ++k) out[j * n + k] = -out[j * n + k];
      }
      v = std::move(out);
    }
    if (sgn(v[c * n]) < 0)
      for (auto& x : v) x = -x;
    remove_content(v);
  }

  Row make_row(IntRow v, std::size_t c) const {
    normalize_pivot(v, c);
    Row row;
    row.pivot = c;
    for (std::size_t j = c; j < ncols; ++j)
      if (!elem_zero(v, j, ar.n)) row.nz.push_back(j);
    row.e = std::move(v);
    return row;
  }

  void refresh_nz(Row& row) const {
    row.nz.clear();
    for (std::size_t j = row.pivot; j < ncols; ++j)
      if (!elem_zero(row.e, j, ar.n)) row.nz.push_back(j);
  }

  FieldScalar to_scalar(const mpz_class* x, const mpz_class& den, bool negate) const {
    const int n = ar.n;
    std::vector<Rational> q(n);
    for (int k = 0; k < n; ++k) {
      if (sgn(x[k]) == 0) continue;
      q[k] = Rational(x[k] * ar.dpow[k], den);
      q[k].canonicalize();
      if (negate) q[k] = -q[k];
    }
    return FieldScalar(field, std::move(q));
  }
};

Echelon::Echelon(FieldPtr field, std::size_t ncols) : impl_(std::make_unique<Impl>(std::move(field), ncols)) {}
Echelon::~Echelon() = default;
Echelon::Echelon(const Echelon& other) : impl_(std::make_unique<Impl>(*other.impl_)) {}
Echelon& Echelon::operator=(const Echelon& other) {
  if (this != &other) impl_ = std::make_unique<Impl>(*other.impl_);
  return *this;
}
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

const FieldPtr& Echelon::field() const { return impl_->field; }
std::size_t Echelon::ncols() const { return impl_->ncols; }
std::size_t Echelon::rank() const { return impl_->rows.size(); }

bool Echelon::insert(const Vector& v) {
  IntRow w = impl_->to_internal(v);
  std::size_t c = impl_->reduce(w);
  if (c == impl_->ncols) return false;
  impl_->row_at[c] = static_cast<int>(impl_->rows.size());
  impl_->rows.push_back(impl_->make_row(std::move(w), c));
  return true;
}

bool Echelon::insert(const SparseVector& v) {
  IntRow w = impl_->to_internal(v);
  std::size_t c = impl_->reduce(w);
  if (c == impl_->ncols) return false;
  impl_->row_at[c] = static_cast<int>(impl_->rows.size());
  impl_->rows.push_back(impl_->make_row(std::move(w), c));
  return true;
}

bool Echelon::contains(const Vector& v) const {
  IntRow w = impl_->to_internal(v);
  return impl_->reduce(w) == impl_->ncols;
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (const auto& r : impl_->rows) out.push_back(r.pivot);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vector> Echelon::kernel() const {
  const Impl& I = *impl_;
  const int n = I.ar.n;
  std::vector<Row> rows = I.rows;
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
  std::vector<int> at(I.ncols, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) at[rows[i].pivot] = static_cast<int>(i);
  // Back substitution to reduced echelon form, bottom up.
  for (std::size_t ii = rows.size(); ii-- > 0;) {
    Row& r = rows[ii];
    bool changed = false;
    for (std::size_t c = r.pivot + 1; c < I.ncols; ++c) {
      int j = at[c];
      if (j < 0 || elem_zero(r.e, c, n)) continue;
      I.eliminate(r.e, rows[j], r.pivot);
      changed = true;
    }
    if (changed) I.refresh_nz(r);
  }
  std::vector<Vector> out;
  for (std::size_t f = 0; f < I.ncols; ++f) {
    if (at[f] >= 0) continue;
    Vector x = zero_vector(I.field, I.ncols);
    x[f] = FieldScalar(I.field, Rational(1));
    for (const auto& r : rows) {
      if (r.pivot > f || elem_zero(r.e, f, n)) continue;
      x[r.pivot] = I.to_scalar(&r.e[f * n], r.e[r.pivot * n], true);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank_of(const FieldPtr& field, std::size_t ncols, const std::vector<Vector>& rows) {
  Echelon e(field, ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<Vector> kernel_of(const FieldPtr& field, std::size_t ncols, const std::vector<Vector>& rows) {
  Echelon e(field, ncols);
  for (const auto& r : rows) e.insert(r);
  return e.kernel();
}

std::vector<Vector> relations_among(const FieldPtr& field, std::size_t dim, const std::vector<Vector>& vecs) {
  std::vector<Vector> rows(dim, zero_vector(field, vecs.size()));
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    if (vecs[j].size() != dim) throw MathError("vector length mismatch");
    for (std::size_t i = 0; i < dim; ++i) rows[i][j] = vecs[j][i];
  }
  return kernel_of(field, vecs.size(), rows);
}

}  // namespace linarr

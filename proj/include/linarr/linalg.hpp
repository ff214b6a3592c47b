#pragma once

// Exact linear algebra over K = Q[t]/(m).
//
// Rows are kept internally with integral coordinates in the power basis of
// s = D*t, where D clears the denominators of m, so every update is a
// fraction-free integer operation. Pivot entries are normalized to positive
// rational integers and row contents are removed after each update.

#include <cstddef>
#include <memory>
#include <vector>

#include "linarr/scalars.hpp"

namespace linarr {

using Vector = std::vector<FieldScalar>;
/// (column, value) pairs; columns need not be sorted, zeros are allowed.
using SparseVector = std::vector<std::pair<std::size_t, FieldScalar>>;

Vector zero_vector(const FieldPtr& field, std::size_t n);

/// Incremental row echelon form of a growing set of vectors in K^ncols.
class Echelon {
 public:
  Echelon(FieldPtr field, std::size_t ncols);
  ~Echelon();
  Echelon(const Echelon& other);
  Echelon& operator=(const Echelon& other);
  Echelon(Echelon&&) noexcept;
  Echelon& operator=(Echelon&&) noexcept;

  const FieldPtr& field() const;
  std::size_t ncols() const;
  std::size_t rank() const;

  /// Adds v to the row space; returns false when v was already in it.
  bool insert(const Vector& v);
  bool insert(const SparseVector& v);
  bool contains(const Vector& v) const;

  /// Basis of {x : r.x = 0 for every inserted row r}, one vector per
  /// non-pivot column j (in increasing j) with x_j = 1.
  std::vector<Vector> kernel() const;

  std::vector<std::size_t> pivot_columns() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::size_t rank_of(const FieldPtr& field, std::size_t ncols, const std::vector<Vector>& rows);

/// Null space of the matrix with the given rows.
std::vector<Vector> kernel_of(const FieldPtr& field, std::size_t ncols, const std::vector<Vector>& rows);

/// Basis of the linear relations {c : sum_i c_i vecs[i] = 0}, vecs in K^dim.
std::vector<Vector> relations_among(const FieldPtr& field, std::size_t dim, const std::vector<Vector>& vecs);

}  // namespace linarr

#pragma once

#include "binlct/numeric.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace binlct {

using IntVector = std::vector<Int>;

bool is_zero(const IntVector& v);
Int dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector min_entrywise(const IntVector& a, const IntVector& b);
IntVector negated(const IntVector& v);
std::string vec_str(const IntVector& v);  // "(2,1,3)"

/// Rectangular matrix of arbitrary-precision integers, row major. The column
/// count is carried explicitly so matrices with zero rows keep their shape.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(size_t cols) : cols_(cols) {}
  IntMatrix(std::initializer_list<IntVector> rows);
  explicit IntMatrix(std::vector<IntVector> rows);
  IntMatrix(std::vector<IntVector> rows, size_t cols);

  static IntMatrix identity(size_t n);

  size_t row_count() const { return rows_.size(); }
  size_t col_count() const { return cols_; }
  const IntVector& operator[](size_t i) const { return rows_[i]; }
  const std::vector<IntVector>& rows() const { return rows_; }
  void push_row(IntVector row);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::vector<IntVector> rows_;
  size_t cols_ = 0;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
size_t rank_over_q(const IntMatrix& m);

/// Basis, as rows, of the lattice {lambda in Z^r : lambda * m = 0}, obtained
/// from a unimodular row reduction of m. Every integer relation among the
/// rows of m is an integer combination of the returned rows.
IntMatrix left_kernel_lattice(const IntMatrix& m);

/// v divided by the gcd of its entries, negated if needed so the first
/// nonzero entry is positive. Throws std::invalid_argument on the zero vector.
IntVector primitive(const IntVector& v);

/// For an (n-1) x n matrix of rank n-1, a primitive generator of the
/// one-dimensional rational nullspace; nullopt when the rank is deficient.
std::optional<IntVector> nullspace_ray(const IntMatrix& m);

/// Exact determinant of a square matrix; throws std::invalid_argument
/// otherwise.
Int determinant(const IntMatrix& m);

/// Incrementally maintained rational row space with exact membership tests.
class RowSpace {
public:
  explicit RowSpace(size_t cols) : cols_(cols) {}

  bool contains(const IntVector& row) const;

  /// Adds the row to the space; returns false (no change) if it was already
  /// in the span.
  bool insert(const IntVector& row);

  size_t rank() const { return basis_.size(); }

private:
  std::vector<Rat> reduce(const IntVector& row) const;

  std::vector<std::vector<Rat>> basis_;  // rows with normalized leading 1
  std::vector<size_t> pivots_;
  size_t cols_;
};

}  // namespace binlct

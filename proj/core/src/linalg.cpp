#include "binlct/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace binlct {

namespace mp = boost::multiprecision;

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector min_entrywise(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("min_entrywise: length mismatch");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

IntVector negated(const IntVector& v) {
  IntVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  s += ")";
  return s;
}

IntMatrix::IntMatrix(std::initializer_list<IntVector> rows)
    : IntMatrix(std::vector<IntVector>(rows)) {}

IntMatrix::IntMatrix(std::vector<IntVector> rows) {
  if (rows.empty()) throw std::invalid_argument("IntMatrix: cannot deduce shape of empty matrix");
  cols_ = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
  rows_ = std::move(rows);
}

IntMatrix::IntMatrix(std::vector<IntVector> rows, size_t cols) : cols_(cols) {
  for (const auto& r : rows)
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
  rows_ = std::move(rows);
}

IntMatrix IntMatrix::identity(size_t n) {
  std::vector<IntVector> rows(n, IntVector(n, 0));
  for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return IntMatrix(std::move(rows), n);
}

void IntMatrix::push_row(IntVector row) {
  if (row.size() != cols_) throw std::invalid_argument("IntMatrix: row length mismatch");
  rows_.push_back(std::move(row));
}

// Fraction-free (Bareiss) elimination; pivots walk the columns left to right
// and every division is exact.
size_t rank_over_q(const IntMatrix& m) {
  std::vector<IntVector> a = m.rows();
  const size_t nr = a.size();
  const size_t nc = m.col_count();
  size_t rank = 0;
  Int prev = 1;
  for (size_t col = 0; col < nc && rank < nr; ++col) {
    size_t pivot = rank;
    while (pivot < nr && a[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t i = rank + 1; i < nr; ++i) {
      for (size_t j = col + 1; j < nc; ++j) {
        Int t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        a[i][j] = t / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Unimodular row reduction [A | I]; once A is in echelon form the identity
// rows sitting next to A's zero rows span the left kernel lattice.
IntMatrix left_kernel_lattice(const IntMatrix& m) {
  const size_t nr = m.row_count();
  const size_t nc = m.col_count();
  std::vector<IntVector> a = m.rows();
  std::vector<IntVector> u = IntMatrix::identity(nr).rows();

  size_t pivot_rows = 0;
  for (size_t col = 0; col < nc && pivot_rows < nr; ++col) {
    for (;;) {
      size_t best = nr;
      for (size_t i = pivot_rows; i < nr; ++i) {
        if (a[i][col] == 0) continue;
        if (best == nr || mp::abs(a[i][col]) < mp::abs(a[best][col])) best = i;
      }
      if (best == nr) break;
      std::swap(a[best], a[pivot_rows]);
      std::swap(u[best], u[pivot_rows]);
      bool cleared = true;
      for (size_t i = pivot_rows + 1; i < nr; ++i) {
        if (a[i][col] == 0) continue;
        Int q = a[i][col] / a[pivot_rows][col];
        if (q != 0) {
          for (size_t j = 0; j < nc; ++j) a[i][j] -= q * a[pivot_rows][j];
          for (size_t j = 0; j < nr; ++j) u[i][j] -= q * u[pivot_rows][j];
        }
        if (a[i][col] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot_rows;
        break;
      }
    }
  }

  std::vector<IntVector> basis;
  for (size_t i = pivot_rows; i < nr; ++i) basis.push_back(u[i]);
  return IntMatrix(std::move(basis), nr);
}

IntVector primitive(const IntVector& v) {
  if (is_zero(v)) throw std::invalid_argument("zero vector has no primitive representative");
  Int g = 0;
  for (const Int& x : v) g = mp::gcd(g, x);
  IntVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  for (const Int& x : r) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : r) y = -y;
    break;
  }
  return r;
}

std::optional<IntVector> nullspace_ray(const IntMatrix& m) {
  const size_t n = m.col_count();
  if (m.row_count() + 1 != n)
    throw std::invalid_argument("nullspace_ray: expected n-1 rows of length n");
  if (n == 1) return IntVector{Int(1)};
  // Signed maximal minors: kernel entry j is (-1)^(1+j) det(m without col j).
  IntVector w(n);
  bool nonzero = false;
  for (size_t j = 0; j < n; ++j) {
    std::vector<IntVector> minor(m.row_count(), IntVector(n - 1));
    for (size_t i = 0; i < m.row_count(); ++i) {
      size_t k = 0;
      for (size_t c = 0; c < n; ++c)
        if (c != j) minor[i][k++] = m[i][c];
    }
    Int d = determinant(IntMatrix(std::move(minor), n - 1));
    w[j] = (j % 2 == 0) ? d : Int(-d);
    if (w[j] != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  return primitive(w);
}

Int determinant(const IntMatrix& m) {
  const size_t n = m.row_count();
  if (n != m.col_count()) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  std::vector<IntVector> a = m.rows();
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = t / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

std::vector<Rat> RowSpace::reduce(const IntVector& row) const {
  if (row.size() != cols_) throw std::invalid_argument("RowSpace: length mismatch");
  std::vector<Rat> r(cols_);
  for (size_t i = 0; i < cols_; ++i) r[i] = Rat(row[i]);
  for (size_t k = 0; k < basis_.size(); ++k) {
    const Rat& f = r[pivots_[k]];
    if (f == 0) continue;
    Rat factor = f;
    for (size_t j = 0; j < cols_; ++j) r[j] -= factor * basis_[k][j];
  }
  return r;
}

bool RowSpace::contains(const IntVector& row) const {
  auto r = reduce(row);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

bool RowSpace::insert(const IntVector& row) {
  auto r = reduce(row);
  size_t pivot = cols_;
  for (size_t j = 0; j < cols_; ++j)
    if (r[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == cols_) return false;
  Rat lead = r[pivot];
  for (auto& x : r) x /= lead;
  basis_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace binlct

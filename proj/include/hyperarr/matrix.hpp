#pragma once

#include <compare>
#include <vector>

#include "hyperarr/rational.hpp"

namespace hyperarr {

// Dense exact-rational matrix, row-major. Orderable so canonical forms can
// key ordered maps directly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  explicit Matrix(std::vector<Vec> row_vectors);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  void append_row(const Vec& v);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Matrix submatrix(const Matrix& m, const std::vector<int>& row_set,
                 const std::vector<int>& col_set);

// Determinant and rank use fraction-free elimination: each row is scaled to
// integers first, then pivots grow only as fast as minors of the scaled
// matrix (every interior division is exact).
Rational det(const Matrix& m);
int rank(const Matrix& m);

// Reduced row echelon form with deterministic pivoting: for each column the
// first not-yet-used row with a nonzero entry becomes the pivot. Zero rows
// are dropped, so the result is canonical for the row space.
Matrix rref(const Matrix& m);

// Basis of the right nullspace derived from rref: one vector per free
// column, free columns taken in ascending order, with the chosen free
// coordinate set to 1 and all other free coordinates 0. Deterministic.
std::vector<Vec> nullspace(const Matrix& m);

struct MinorEntry {
  std::vector<int> row_set, col_set;  // sorted index sets into m
  Rational value;
};

// All size x size minors, lexicographic by (row_set, col_set).
std::vector<MinorEntry> minors(const Matrix& m, int size);

Rational sum_squared_minors(const Matrix& m, int size);

Vec cross(const Vec& a, const Vec& b);  // 3-vectors only

Rational dot(const Vec& a, const Vec& b);

bool is_zero_vec(const Vec& v);

// Scales v by the least common multiple of its denominators and divides out
// the gcd of the resulting numerators; flips sign so the first nonzero entry
// is positive. Canonical primitive representative of the line spanned by v.
Vec primitive_integer_vector(const Vec& v);

}  // namespace hyperarr

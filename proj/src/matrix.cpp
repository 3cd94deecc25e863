#include "hyperarr/matrix.hpp"

#include <algorithm>
#include <utility>

#include "hyperarr/errors.hpp"
#include "hyperarr/subsets.hpp"

namespace hyperarr {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("matrix: negative shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Matrix::Matrix(std::vector<Vec> row_vectors) {
  rows_ = static_cast<int>(row_vectors.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(row_vectors[0].size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const Vec& r : row_vectors) {
    if (static_cast<int>(r.size()) != cols_)
      throw DimensionError("matrix: ragged row lengths");
    for (const Rational& x : r) data_.push_back(x);
  }
}

Vec Matrix::row(int r) const {
  Vec out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

void Matrix::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(v.size());
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionError("matrix: appended row has wrong length");
  for (const Rational& x : v) data_.push_back(x);
  ++rows_;
}

Matrix submatrix(const Matrix& m, const std::vector<int>& row_set,
                 const std::vector<int>& col_set) {
  Matrix out(static_cast<int>(row_set.size()), static_cast<int>(col_set.size()));
  for (std::size_t i = 0; i < row_set.size(); ++i) {
    const int r = row_set[i];
    if (r < 0 || r >= m.rows()) throw DimensionError("submatrix: row index out of range");
    for (std::size_t j = 0; j < col_set.size(); ++j) {
      const int c = col_set[j];
      if (c < 0 || c >= m.cols()) throw DimensionError("submatrix: column index out of range");
      out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(r, c);
    }
  }
  return out;
}

namespace {

// Clears denominators row by row and runs one-step fraction-free elimination
// (Bareiss): entries after step t are t+1 minors of the scaled matrix, and
// the division by the previous pivot is exact. Column skips (for rank on
// singular input) keep that invariant, since entries stay minors over the
// pivot columns actually used.
struct Elimination {
  int rank = 0;
  int sign = 1;                 // parity of row swaps
  mpz_class last_pivot = 1;     // pivot of the final elimination step
  mpz_class scale_product = 1;  // product of all row scale factors
};

Elimination fraction_free_eliminate(const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  Elimination e;
  for (int r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (int c = 0; c < cols; ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                           m.at(r, c).raw().get_den().get_mpz_t());
    for (int c = 0; c < cols; ++c) {
      const mpq_class& q = m.at(r, c).raw();
      a[r][c] = q.get_num() * (scale / q.get_den());
    }
    e.scale_product *= scale;
  }

  mpz_class prev = 1;
  int pr = 0;  // next pivot row
  for (int c = 0; c < cols && pr < rows; ++c) {
    int p = pr;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != pr) {
      std::swap(a[p], a[pr]);
      e.sign = -e.sign;
    }
    for (int i = pr + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = a[i][j] * a[pr][c] - a[i][c] * a[pr][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[pr][c];
    e.last_pivot = prev;
    ++pr;
  }
  e.rank = pr;
  return e;
}

}  // namespace

Rational det(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix not square");
  if (m.rows() == 0) return Rational(1);
  Elimination e = fraction_free_eliminate(m);
  if (e.rank < m.rows()) return Rational(0);
  mpq_class d(e.sign < 0 ? mpz_class(-e.last_pivot) : e.last_pivot, e.scale_product);
  d.canonicalize();
  return Rational(d);
}

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return fraction_free_eliminate(m).rank;
}

Matrix rref(const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<Vec> a(rows);
  for (int r = 0; r < rows; ++r) a[r] = m.row(r);

  int pr = 0;
  for (int c = 0; c < cols && pr < rows; ++c) {
    int p = pr;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pr]);
    const Rational inv = Rational(1) / a[pr][c];
    for (int j = c; j < cols; ++j) a[pr][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == pr || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[pr][j];
    }
    ++pr;
  }
  a.resize(pr);  // drop zero rows: canonical for the row space
  return Matrix(std::move(a));
}

std::vector<Vec> nullspace(const Matrix& m) {
  const Matrix r = rref(m);
  const int cols = m.cols();
  std::vector<int> pivot_col(r.rows());
  std::vector<bool> is_pivot(cols, false);
  for (int i = 0; i < r.rows(); ++i) {
    int c = 0;
    while (c < cols && r.at(i, c).is_zero()) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = Rational(1);
    for (int i = 0; i < r.rows(); ++i) v[pivot_col[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<MinorEntry> minors(const Matrix& m, int size) {
  if (size < 0 || size > m.rows() || size > m.cols())
    throw DimensionError("minors: size exceeds matrix dimensions");
  std::vector<MinorEntry> out;
  for (const auto& rs : subsets(m.rows(), size))
    for (const auto& cs : subsets(m.cols(), size))
      out.push_back({rs, cs, det(submatrix(m, rs, cs))});
  return out;
}

Rational sum_squared_minors(const Matrix& m, int size) {
  Rational total(0);
  for (const MinorEntry& e : minors(m, size)) total += e.value * e.value;
  return total;
}

Vec cross(const Vec& a, const Vec& b) {
  if (a.size() != 3 || b.size() != 3) throw DimensionError("cross: vectors must have length 3");
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec primitive_integer_vector(const Vec& v) {
  mpz_class scale = 1;
  for (const Rational& x : v)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.raw().get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const Rational& x : v) {
    ints.push_back(x.raw().get_num() * (scale / x.raw().get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) return Vec(v.size(), Rational(0));
  int lead = 0;
  for (const mpz_class& z : ints) {
    if (z != 0) {
      lead = sgn(z);
      break;
    }
  }
  if (lead < 0) g = -g;
  Vec out;
  out.reserve(v.size());
  for (mpz_class& z : ints) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    out.push_back(Rational(mpq_class(q)));
  }
  return out;
}

}  // namespace hyperarr

#include "hyperarr/partitions.hpp"

#include <algorithm>

#include "hyperarr/discriminantal.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/subsets.hpp"

namespace hyperarr {

GoodPartition::GoodPartition(std::array<std::vector<int>, 3> blocks,
                             std::vector<int> tail)
    : blocks_(std::move(blocks)), tail_(std::move(tail)) {
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw DomainError("good partition: repeated index inside a block");
    for (int i : b)
      if (i < 0) throw DomainError("good partition: negative index");
  }
  std::sort(blocks_.begin(), blocks_.end());

  const std::size_t size = blocks_[0].size();
  if (size == 0 || size % 2 != 0)
    throw DomainError("good partition: blocks must have positive even size");
  s_ = static_cast<int>(size / 2);
  for (const auto& b : blocks_)
    if (b.size() != size) throw DomainError("good partition: blocks differ in size");

  const auto i12 = sorted_intersection(blocks_[0], blocks_[1]);
  const auto i13 = sorted_intersection(blocks_[0], blocks_[2]);
  const auto i23 = sorted_intersection(blocks_[1], blocks_[2]);
  if (static_cast<int>(i12.size()) != s_ || static_cast<int>(i13.size()) != s_ ||
      static_cast<int>(i23.size()) != s_)
    throw DomainError("good partition: pairwise intersections must have size s");
  if (!sorted_intersection(i12, blocks_[2]).empty())
    throw DomainError("good partition: triple intersection must be empty");

  std::sort(tail_.begin(), tail_.end());
  if (std::adjacent_find(tail_.begin(), tail_.end()) != tail_.end())
    throw DomainError("good partition: repeated index in tail");
  for (int i : tail_)
    if (i < 0) throw DomainError("good partition: negative tail index");
  if (!sorted_intersection(tail_, support()).empty())
    throw DomainError("good partition: tail must be disjoint from the blocks");
}

std::array<std::vector<int>, 3> GoodPartition::pair_intersections() const {
  return {sorted_intersection(blocks_[0], blocks_[1]),
          sorted_intersection(blocks_[0], blocks_[2]),
          sorted_intersection(blocks_[1], blocks_[2])};
}

std::vector<int> GoodPartition::support() const {
  return sorted_union(sorted_union(blocks_[0], blocks_[1]), blocks_[2]);
}

std::vector<GoodPartition> enumerate_good_partitions(int n, int s) {
  if (s < 1) throw DomainError("enumerate_good_partitions: s must be >= 1");
  if (n < 0) throw DomainError("enumerate_good_partitions: n must be >= 0");
  std::vector<GoodPartition> out;
  if (3 * s > n) return out;

  // Split each 3s-element support into unordered blocks {I1, I2, I3} of size
  // s (I1 containing the minimum, I2 the minimum of the rest); the partition
  // blocks are the pairwise unions, which do not depend on the order of the
  // I's.
  for (const auto& support : subsets(n, 3 * s)) {
    const std::vector<int> rest0(support.begin() + 1, support.end());
    for (const auto& pick1 : subsets(static_cast<int>(rest0.size()), s - 1)) {
      std::vector<int> i1{support[0]};
      for (int idx : pick1) i1.push_back(rest0[idx]);
      const auto rem1 = sorted_difference(support, i1);
      const std::vector<int> rest1(rem1.begin() + 1, rem1.end());
      for (const auto& pick2 : subsets(static_cast<int>(rest1.size()), s - 1)) {
        std::vector<int> i2{rem1[0]};
        for (int idx : pick2) i2.push_back(rest1[idx]);
        const auto i3 = sorted_difference(rem1, i2);
        out.emplace_back(std::array<std::vector<int>, 3>{
            sorted_union(i1, i2), sorted_union(i1, i3), sorted_union(i2, i3)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void validate_against(const Arrangement& a, const GoodPartition& p, const char* op) {
  if (2 * p.s() + static_cast<int>(p.tail().size()) != a.k() + 1)
    throw DomainError(std::string(op) +
                      ": block size plus tail size must equal k + 1");
  const auto sup = p.support();
  if (!sup.empty() && sup.back() >= a.n())
    throw DomainError(std::string(op) + ": partition index out of range");
  if (!p.tail().empty() && p.tail().back() >= a.n())
    throw DomainError(std::string(op) + ": tail index out of range");
}

// Rows of the original normals indexed by `idx`.
Matrix normal_rows(const Arrangement& a, const std::vector<int>& idx) {
  std::vector<Vec> rows;
  rows.reserve(idx.size());
  for (int i : idx) rows.push_back(a.normal(i));
  return Matrix(std::move(rows));
}

std::array<Matrix, 3> kernel_bases(const Arrangement& a, const GoodPartition& p) {
  const int expected_dim = a.k() - p.s() - static_cast<int>(p.tail().size());
  std::array<Matrix, 3> bases;
  int slot = 0;
  for (const auto& inter : p.pair_intersections()) {
    const auto basis = nullspace(normal_rows(a, sorted_union(inter, p.tail())));
    if (static_cast<int>(basis.size()) != expected_dim)
      throw Error("kernel_triple: kernel dimension disagrees with genericity");
    bases[slot++] = Matrix(basis);
  }
  return bases;
}

Matrix stacked_kernels(const std::array<Matrix, 3>& bases) {
  Matrix stack(0, bases[0].cols());
  for (const Matrix& b : bases)
    for (int r = 0; r < b.rows(); ++r) stack.append_row(b.row(r));
  return stack;
}

// Coordinates of v inside the tail subspace, read off against the canonical
// nullspace basis of the tail normals: that basis is the identity on the
// free columns, so the coordinates are just v restricted to them.
Matrix tail_coordinates(const Arrangement& a, const GoodPartition& p,
                        const Matrix& stack) {
  if (p.tail().empty()) return stack;
  const Matrix reduced = rref(normal_rows(a, p.tail()));
  std::vector<bool> is_pivot(a.k(), false);
  for (int i = 0; i < reduced.rows(); ++i) {
    int c = 0;
    while (c < reduced.cols() && reduced.at(i, c).is_zero()) ++c;
    is_pivot[c] = true;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < a.k(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::vector<int> all_rows(stack.rows());
  for (int r = 0; r < stack.rows(); ++r) all_rows[r] = r;
  return submatrix(stack, all_rows, free_cols);
}

}  // namespace

Matrix triple_matrix(const Arrangement& a, const GoodPartition& p) {
  validate_against(a, p, "triple_matrix");
  require_generic(a, "triple_matrix");
  Matrix m(0, a.n());
  for (const auto& block : p.blocks())
    m.append_row(discriminantal_normal(a, sorted_union(block, p.tail())));
  return m;
}

Rational minor_square_sum(const Arrangement& a, const GoodPartition& p) {
  return sum_squared_minors(triple_matrix(a, p), 3);
}

KernelTriple kernel_triple(const Arrangement& a, const GoodPartition& p) {
  validate_against(a, p, "kernel_triple");
  require_generic(a, "kernel_triple");
  return {kernel_bases(a, p)};
}

Rational kernel_minor_square_sum(const Arrangement& a, const GoodPartition& p) {
  validate_against(a, p, "kernel_minor_square_sum");
  require_generic(a, "kernel_minor_square_sum");
  const Matrix coords =
      tail_coordinates(a, p, stacked_kernels(kernel_bases(a, p)));
  return sum_squared_minors(coords, coords.cols());
}

bool is_dependent(const Arrangement& a, const GoodPartition& p) {
  validate_against(a, p, "is_dependent");
  require_generic(a, "is_dependent");
  const int ambient = a.k() - static_cast<int>(p.tail().size());
  return rank(stacked_kernels(kernel_bases(a, p))) < ambient;
}

std::vector<GoodPartition> find_dependent(const Arrangement& a) {
  require_generic(a, "find_dependent");
  std::vector<GoodPartition> out;
  for (int s = 2; 2 * s <= a.k() + 1; ++s) {
    const int t = a.k() + 1 - 2 * s;
    for (const GoodPartition& base : enumerate_good_partitions(a.n(), s)) {
      const auto remaining = sorted_difference(
          [&] {
            std::vector<int> all(a.n());
            for (int i = 0; i < a.n(); ++i) all[i] = i;
            return all;
          }(),
          base.support());
      for (const auto& pick : subsets(static_cast<int>(remaining.size()), t)) {
        std::vector<int> tail;
        tail.reserve(t);
        for (int idx : pick) tail.push_back(remaining[idx]);
        GoodPartition p(base.blocks(), std::move(tail));
        if (is_dependent(a, p)) out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperarr

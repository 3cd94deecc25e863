#pragma once

#include <array>
#include <compare>
#include <vector>

#include "hyperarr/arrangement.hpp"

namespace hyperarr {

// A good triple of blocks: three 2s-element index sets whose pairwise
// intersections all have size exactly s and whose triple intersection is
// empty, plus an optional tail of extra indices disjoint from the blocks.
// Stored canonically: each block sorted, blocks in lexicographic order,
// tail sorted. Indices are 0-based.
class GoodPartition {
 public:
  GoodPartition(std::array<std::vector<int>, 3> blocks, std::vector<int> tail = {});

  int s() const { return s_; }
  const std::array<std::vector<int>, 3>& blocks() const { return blocks_; }
  const std::vector<int>& tail() const { return tail_; }

  // I12 = B1 n B2, I13 = B1 n B3, I23 = B2 n B3 (for the canonical block
  // order); each has size s and their union recovers the blocks.
  std::array<std::vector<int>, 3> pair_intersections() const;

  std::vector<int> support() const;  // sorted union of the blocks, size 3s

  friend bool operator==(const GoodPartition& a, const GoodPartition& b) {
    return a.blocks_ == b.blocks_ && a.tail_ == b.tail_;
  }
  friend std::strong_ordering operator<=>(const GoodPartition& a,
                                          const GoodPartition& b) {
    if (auto c = a.blocks_ <=> b.blocks_; c != 0) return c;
    return a.tail_ <=> b.tail_;
  }

 private:
  int s_;
  std::array<std::vector<int>, 3> blocks_;
  std::vector<int> tail_;
};

// All good partitions with blocks of size 2s supported inside {0,...,n-1},
// tail empty, in canonical ascending order. There are
// C(n,3s) * (3s)! / (s!^3 * 3!) of them.
std::vector<GoodPartition> enumerate_good_partitions(int n, int s);

// The 3 x n matrix whose rows are the discriminantal normals of
// B1 u tail, B2 u tail, B3 u tail. Requires |block| + |tail| = k + 1 and a
// generic arrangement.
Matrix triple_matrix(const Arrangement& a, const GoodPartition& p);

// Sum of the squared 3 x 3 column minors of triple_matrix: zero exactly when
// the three discriminantal hyperplanes share a codimension-2 stratum.
Rational minor_square_sum(const Arrangement& a, const GoodPartition& p);

struct KernelTriple {
  // Basis vectors (rows, in R^k) of the subspace orthogonal to the normals
  // indexed by each pairwise intersection together with the tail. Each basis
  // has k - s - t rows for t = |tail|.
  std::array<Matrix, 3> bases;
};

KernelTriple kernel_triple(const Arrangement& a, const GoodPartition& p);

// Sum of squared maximal minors of the three stacked kernel bases expressed
// in coordinates of the common tail subspace: a 3(k-s-t) x (k-t) matrix and
// its (k-t) x (k-t) minors. Zero exactly when the three kernels fail to span
// that subspace. With an empty tail this is the stacked-basis matrix in R^k
// itself and its k x k minors.
Rational kernel_minor_square_sum(const Arrangement& a, const GoodPartition& p);

// True when the three kernels do not span the tail subspace, i.e. the rank
// of the stacked bases is < k - t. Equivalent to minor_square_sum == 0 and
// to kernel_minor_square_sum == 0.
bool is_dependent(const Arrangement& a, const GoodPartition& p);

// Scans every good partition compatible with the arrangement: all s >= 2
// with t = k + 1 - 2s >= 0, all supports, all block triples, all tails drawn
// from the remaining indices. Returns the dependent ones in canonical
// ascending order.
std::vector<GoodPartition> find_dependent(const Arrangement& a);

}  // namespace hyperarr

#pragma once

#include <cstdint>
#include <vector>

namespace hyperarr {

// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<int>> subsets(int n, int k);

// In-place lex successor of a sorted k-subset of {0, ..., n-1};
// returns false once the last subset has been passed.
bool next_subset(std::vector<int>& s, int n);

std::uint64_t binomial(int n, int k);

// Sign of the permutation taking `tuple` to its sorted order, or 0 if any
// entry repeats. Counts inversions; tuples here never exceed a handful of
// entries.
int permutation_sign(const std::vector<int>& tuple);

// a \ b for sorted vectors; result sorted.
std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace hyperarr

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hyperarr/arrangement.hpp"

namespace hyperarr {

// Normal vector (length n) of the hyperplane indexed by the sorted
// (k+1)-subset L in the discriminantal arrangement of `a`: entry s_i carries
// the signed k x k determinant of the remaining normals, all other entries
// are zero. Requires a generic arrangement.
Vec discriminantal_normal(const Arrangement& a, const std::vector<int>& L);

// All C(n, k+1) discriminantal normals stacked in lexicographic order of L.
// Every (k+1) x (k+1) minor of this matrix vanishes.
Matrix discriminantal_matrix(const Arrangement& a);

// Lexicographic list of the (k+1)-subsets indexing the rows of
// discriminantal_matrix, for callers that need row -> subset.
std::vector<std::vector<int>> discriminantal_index_sets(const Arrangement& a);

struct CensusOptions {
  int threads = 1;
  // Full per-stratum member lists are retained only when n <= this bound;
  // the multiplicity counts and the multiplicity-3 triples are always kept.
  int member_retention_limit = 8;
};

struct Stratum {
  Matrix span;                            // canonical reduced row form, 2 x n
  std::vector<std::vector<int>> members;  // sorted (k+1)-subsets through it
};

struct StrataCensus {
  int n = 0;
  int k = 0;
  std::uint64_t hyperplanes = 0;  // C(n, k+1)
  // multiplicity -> number of codimension-2 strata, iterated descending
  std::map<int, std::uint64_t, std::greater<int>> census;
  // Strata lying on exactly three hyperplanes, as sorted triples of
  // (k+1)-subsets; always retained.
  std::vector<std::array<std::vector<int>, 3>> multiplicity3_triples;
  std::vector<Stratum> strata;  // full detail; empty unless retained
  bool members_retained = false;
};

// Groups all C(N, 2) pairs of discriminantal hyperplanes by the span of
// their normals and counts how many hyperplanes pass through each resulting
// codimension-2 stratum. Deterministic for any thread count. Verifies the
// internal pair-count identity sum C(m_s, 2) = C(N, 2).
StrataCensus strata_census(const Arrangement& a, const CensusOptions& opts = {});

// Rank of the three stacked discriminantal normals for distinct
// (k+1)-subsets L1, L2, L3: 3 when the intersection has codimension 3,
// 2 when the three hyperplanes share a codimension-2 stratum.
int triple_codim(const Arrangement& a, const std::vector<int>& L1,
                 const std::vector<int>& L2, const std::vector<int>& L3);

}  // namespace hyperarr

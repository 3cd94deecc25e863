#include "hyperarr/discriminantal.hpp"

#include <algorithm>
#include <set>

#include "hyperarr/errors.hpp"
#include "hyperarr/parallel.hpp"
#include "hyperarr/subsets.hpp"

namespace hyperarr {

namespace {

void validate_index_set(const Arrangement& a, const std::vector<int>& L, const char* op) {
  if (static_cast<int>(L.size()) != a.k() + 1)
    throw DomainError(std::string(op) + ": index set must have k+1 elements");
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (L[i] < 0 || L[i] >= a.n())
      throw DomainError(std::string(op) + ": index out of range");
    if (i > 0 && L[i] <= L[i - 1])
      throw DomainError(std::string(op) + ": indices must be strictly increasing");
  }
}

// Unchecked core shared by the public entry points: the sign alternates over
// the positions of L, starting negative at the first.
Vec discriminantal_normal_core(const Arrangement& a, const std::vector<int>& L) {
  const Matrix nm = a.normal_matrix();
  std::vector<int> all_cols(a.k());
  for (int c = 0; c < a.k(); ++c) all_cols[c] = c;
  Vec alpha(a.n(), Rational(0));
  for (std::size_t i = 0; i < L.size(); ++i) {
    std::vector<int> rest;
    rest.reserve(L.size() - 1);
    for (std::size_t j = 0; j < L.size(); ++j)
      if (j != i) rest.push_back(L[j]);
    const Rational d = det(submatrix(nm, rest, all_cols));
    alpha[L[i]] = (i % 2 == 0) ? -d : d;
  }
  return alpha;
}

}  // namespace

Vec discriminantal_normal(const Arrangement& a, const std::vector<int>& L) {
  validate_index_set(a, L, "discriminantal_normal");
  require_generic(a, "discriminantal_normal");
  return discriminantal_normal_core(a, L);
}

std::vector<std::vector<int>> discriminantal_index_sets(const Arrangement& a) {
  return subsets(a.n(), a.k() + 1);
}

Matrix discriminantal_matrix(const Arrangement& a) {
  require_generic(a, "discriminantal_matrix");
  Matrix m(0, a.n());
  for (const auto& L : discriminantal_index_sets(a))
    m.append_row(discriminantal_normal_core(a, L));
  return m;
}

int triple_codim(const Arrangement& a, const std::vector<int>& L1,
                 const std::vector<int>& L2, const std::vector<int>& L3) {
  validate_index_set(a, L1, "triple_codim");
  validate_index_set(a, L2, "triple_codim");
  validate_index_set(a, L3, "triple_codim");
  if (L1 == L2 || L1 == L3 || L2 == L3)
    throw DomainError("triple_codim: index sets must be distinct");
  require_generic(a, "triple_codim");
  Matrix m(0, a.n());
  m.append_row(discriminantal_normal_core(a, L1));
  m.append_row(discriminantal_normal_core(a, L2));
  m.append_row(discriminantal_normal_core(a, L3));
  return rank(m);
}

namespace {

struct Bucket {
  std::set<int> members;       // row indices through the stratum
  std::uint64_t pair_count = 0;  // pairs that hashed to this span
};

using BucketMap = std::map<Matrix, Bucket>;

}  // namespace

StrataCensus strata_census(const Arrangement& a, const CensusOptions& opts) {
  require_generic(a, "strata_census");

  const auto index_sets = discriminantal_index_sets(a);
  const int N = static_cast<int>(index_sets.size());
  std::vector<Vec> rows(N);
  for (int i = 0; i < N; ++i)
    rows[i] = discriminantal_normal_core(a, index_sets[i]);

  // Flatten the pair list so it can be sliced contiguously.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(N) * (N - 1) / 2);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) pairs.emplace_back(i, j);

  const int threads = std::max(1, opts.threads);
  std::vector<BucketMap> partial(
      static_cast<std::size_t>(std::min<std::size_t>(threads, pairs.size() + 1)));
  parallel_slices(pairs.size(), static_cast<int>(partial.size()),
                  [&](std::size_t slice, std::size_t begin, std::size_t end) {
    BucketMap& local = partial[slice];
    for (std::size_t p = begin; p < end; ++p) {
      const auto [i, j] = pairs[p];
      Matrix span = rref(Matrix({rows[i], rows[j]}));
      if (span.rows() != 2)
        throw Error("strata_census: pair of discriminantal normals is not rank 2");
      Bucket& b = local[std::move(span)];
      b.members.insert(i);
      b.members.insert(j);
      b.pair_count += 1;
    }
  });

  // Ordered merge: the final map is keyed by canonical span, so the result
  // is independent of how the pair list was sliced.
  BucketMap merged;
  for (BucketMap& part : partial) {
    for (auto& [span, bucket] : part) {
      Bucket& b = merged[span];
      b.members.insert(bucket.members.begin(), bucket.members.end());
      b.pair_count += bucket.pair_count;
    }
  }

  StrataCensus out;
  out.n = a.n();
  out.k = a.k();
  out.hyperplanes = static_cast<std::uint64_t>(N);
  out.members_retained = a.n() <= opts.member_retention_limit;

  std::uint64_t total_pairs = 0;
  for (const auto& [span, bucket] : merged) {
    const int m = static_cast<int>(bucket.members.size());
    const std::uint64_t expected_pairs =
        static_cast<std::uint64_t>(m) * (m - 1) / 2;
    if (bucket.pair_count != expected_pairs)
      throw Error("strata_census: pair-count identity violated within a stratum");
    total_pairs += bucket.pair_count;
    out.census[m] += 1;

    if (m == 3) {
      std::array<std::vector<int>, 3> triple;
      int t = 0;
      for (int row : bucket.members) triple[t++] = index_sets[row];
      out.multiplicity3_triples.push_back(std::move(triple));
    }
    if (out.members_retained) {
      Stratum s;
      s.span = span;
      for (int row : bucket.members) s.members.push_back(index_sets[row]);
      out.strata.push_back(std::move(s));
    }
  }
  if (total_pairs != static_cast<std::uint64_t>(N) * (N - 1) / 2)
    throw Error("strata_census: pair-count identity violated globally");

  std::sort(out.multiplicity3_triples.begin(), out.multiplicity3_triples.end());
  return out;
}

}  // namespace hyperarr

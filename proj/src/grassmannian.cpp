#include "hyperarr/grassmannian.hpp"

#include <algorithm>

#include "hyperarr/errors.hpp"
#include "hyperarr/parallel.hpp"
#include "hyperarr/subsets.hpp"

namespace hyperarr {

const Rational& PluckerTable::at(const std::vector<int>& sorted_subset) const {
  const auto it = values.find(sorted_subset);
  if (it == values.end())
    throw DomainError("plucker table: no entry for the given index set");
  return it->second;
}

Rational PluckerTable::signed_value(const std::vector<int>& tuple) const {
  const int sign = permutation_sign(tuple);
  if (sign == 0) return Rational(0);
  std::vector<int> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  const Rational& v = at(sorted);
  return sign > 0 ? v : -v;
}

PluckerTable plucker_table(const Matrix& rows) {
  if (rows.rows() <= rows.cols())
    throw DimensionError("plucker table: need more rows than columns");
  PluckerTable t;
  t.n = rows.rows();
  t.k = rows.cols();
  std::vector<int> all_cols(t.k);
  for (int c = 0; c < t.k; ++c) all_cols[c] = c;
  t.all_nonzero = true;
  for (const auto& rs : subsets(t.n, t.k)) {
    Rational v = det(submatrix(rows, rs, all_cols));
    if (v.is_zero()) t.all_nonzero = false;
    t.values.emplace(rs, std::move(v));
  }
  return t;
}

PluckerTable plucker_coords(const Arrangement& a) {
  return plucker_table(a.normal_matrix());
}

PluckerCheck check_plucker_relations(const PluckerTable& t) {
  for (const auto& left : subsets(t.n, t.k - 1)) {
    for (const auto& right : subsets(t.n, t.k + 1)) {
      Rational sum(0);
      std::vector<int> extended(left.size() + 1);
      std::copy(left.begin(), left.end(), extended.begin());
      for (std::size_t l = 0; l < right.size(); ++l) {
        extended.back() = right[l];
        std::vector<int> reduced;
        reduced.reserve(right.size() - 1);
        for (std::size_t j = 0; j < right.size(); ++j)
          if (j != l) reduced.push_back(right[j]);
        const Rational term = t.signed_value(extended) * t.at(reduced);
        sum += (l % 2 == 0) ? term : -term;
      }
      if (!sum.is_zero()) return {false, PluckerViolation{left, right, sum}};
    }
  }
  return {true, std::nullopt};
}

Pairing canonical_pairing(const Pairing& p) {
  Pairing q = p;
  for (auto& pair : q)
    if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
  std::sort(q.begin(), q.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return q;
}

std::vector<Pairing> pairings_of_six(const std::vector<int>& support) {
  if (support.size() != 6 || !std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end())
    throw DomainError("pairings_of_six: need six distinct sorted indices");
  std::vector<Pairing> out;
  out.reserve(15);
  for (std::size_t x = 1; x < 6; ++x) {
    std::vector<int> rest;
    for (std::size_t i = 1; i < 6; ++i)
      if (i != x) rest.push_back(support[i]);
    for (std::size_t y = 1; y < 4; ++y) {
      std::vector<int> last;
      for (std::size_t i = 1; i < 4; ++i)
        if (i != y) last.push_back(rest[i]);
      out.push_back(Pairing{{{support[0], support[x]},
                             {rest[0], rest[y]},
                             {last[0], last[1]}}});
    }
  }
  return out;
}

Rational quadric_value(const PluckerTable& t, const Pairing& pairing) {
  if (t.k != 3) throw DomainError("quadric_value: defined for k = 3 only");
  std::vector<int> flat;
  for (const auto& pair : pairing)
    for (int i : pair) {
      if (i < 0 || i >= t.n) throw DomainError("quadric_value: index out of range");
      flat.push_back(i);
    }
  if (permutation_sign(flat) == 0)
    throw DomainError("quadric_value: pairing indices must be distinct");
  const Pairing q = canonical_pairing(pairing);
  const int i1 = q[0][0], i2 = q[0][1], i3 = q[1][0], i4 = q[1][1],
            i5 = q[2][0], i6 = q[2][1];
  return t.signed_value({i1, i3, i4}) * t.signed_value({i2, i5, i6}) -
         t.signed_value({i2, i3, i4}) * t.signed_value({i1, i5, i6});
}

QuadricScan quadric_scan(const Arrangement& a,
                         const std::optional<std::vector<int>>& support,
                         int threads) {
  if (a.k() != 3) throw DomainError("quadric_scan: defined for k = 3 only");
  require_generic(a, "quadric_scan");
  const PluckerTable table = plucker_coords(a);

  std::vector<std::vector<int>> supports;
  if (support) {
    std::vector<int> s = *support;
    std::sort(s.begin(), s.end());
    if (s.size() != 6 || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw DomainError("quadric_scan: support must be six distinct indices");
    if (s.front() < 0 || s.back() >= a.n())
      throw DomainError("quadric_scan: support index out of range");
    supports.push_back(std::move(s));
  } else {
    supports = subsets(a.n(), 6);
  }

  std::vector<std::vector<QuadricEntry>> partial(
      std::max<std::size_t>(1, std::min<std::size_t>(std::max(1, threads),
                                                     supports.size())));
  parallel_slices(supports.size(), static_cast<int>(partial.size()),
                  [&](std::size_t slice, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (const Pairing& p : pairings_of_six(supports[i])) {
        QuadricEntry e;
        e.support = supports[i];
        e.pairing = p;
        e.value = quadric_value(table, p);
        e.vanishes = e.value.is_zero();
        partial[slice].push_back(std::move(e));
      }
    }
  });

  QuadricScan out;
  for (auto& part : partial)
    for (auto& e : part) {
      out.checked += 1;
      if (e.vanishes) out.vanishing += 1;
      out.entries.push_back(std::move(e));
    }
  return out;
}

SingleMinorReport single_minor_criterion(const Arrangement& a,
                                         const GoodPartition& p) {
  if (a.k() != 3)
    throw DomainError("single_minor_criterion: defined for k = 3 only");
  if (p.s() != 2 || !p.tail().empty())
    throw DomainError(
        "single_minor_criterion: needs 4-element blocks and an empty tail");
  const Matrix m = triple_matrix(a, p);  // checks range and genericity

  const std::vector<int> sup = p.support();
  const auto& blocks = p.blocks();
  auto structurally_nonzero = [&](int row, int col) {
    return std::binary_search(blocks[row].begin(), blocks[row].end(), col);
  };
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& pick : subsets(6, 3)) {
    const std::vector<int> cols{sup[pick[0]], sup[pick[1]], sup[pick[2]]};
    const bool has_sdr = std::any_of(
        std::begin(kPerms), std::end(kPerms), [&](const int(&perm)[3]) {
          return structurally_nonzero(perm[0], cols[0]) &&
                 structurally_nonzero(perm[1], cols[1]) &&
                 structurally_nonzero(perm[2], cols[2]);
        });
    if (!has_sdr) continue;
    SingleMinorReport r;
    r.columns = cols;
    r.value = det(submatrix(m, {0, 1, 2}, cols));
    r.dependent = r.value.is_zero();
    return r;
  }
  throw Error("single_minor_criterion: no column triple admits a matching");
}

}  // namespace hyperarr

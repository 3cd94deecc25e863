#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/partitions.hpp"

namespace hyperarr {

// Maximal-minor table of an n x k matrix of row vectors: one exact value per
// sorted k-subset of rows. For a generic arrangement every entry is nonzero;
// the flag records whether that holds for this table.
struct PluckerTable {
  int n = 0;
  int k = 0;
  std::map<std::vector<int>, Rational> values;  // sorted k-subsets -> minor
  bool all_nonzero = false;

  const Rational& at(const std::vector<int>& sorted_subset) const;

  // Value for an arbitrary index tuple: 0 when an index repeats, otherwise
  // the table value times the sign of the permutation sorting the tuple.
  Rational signed_value(const std::vector<int>& tuple) const;
};

PluckerTable plucker_table(const Matrix& rows);
PluckerTable plucker_coords(const Arrangement& a);

struct PluckerViolation {
  std::vector<int> left;   // sorted (k-1)-subset
  std::vector<int> right;  // sorted (k+1)-subset
  Rational value;          // the nonzero alternating sum
};

struct PluckerCheck {
  bool ok = true;
  std::optional<PluckerViolation> violation;  // first in (left, right) lex order
};

// Verifies the exchange relations: for every sorted (k-1)-subset I and
// (k+1)-subset J, the alternating sum over l of
// value(I + J[l]) * value(J - J[l]) vanishes. Tables of actual maximal
// minors always pass; a perturbed table is caught with a named witness.
PluckerCheck check_plucker_relations(const PluckerTable& t);

// Pairing of six distinct indices into ordered pairs; canonical form sorts
// each pair and orders pairs by first element.
using Pairing = std::array<std::array<int, 2>, 3>;

Pairing canonical_pairing(const Pairing& p);

// The 15 pairings of a sorted 6-element support, in deterministic order.
std::vector<Pairing> pairings_of_six(const std::vector<int>& support);

// For k = 3 tables: the quadric value
//   value(i1,i3,i4) * value(i2,i5,i6) - value(i2,i3,i4) * value(i1,i5,i6)
// for the canonical form of the pairing ((i1,i2),(i3,i4),(i5,i6)).
// It vanishes exactly when the good partition with blocks
// {i1,i2,i3,i4}, {i1,i2,i5,i6}, {i3,i4,i5,i6} is dependent.
Rational quadric_value(const PluckerTable& t, const Pairing& pairing);

struct QuadricEntry {
  std::vector<int> support;  // sorted, 6 elements
  Pairing pairing;
  Rational value;
  bool vanishes = false;
};

struct QuadricScan {
  std::vector<QuadricEntry> entries;
  std::uint64_t checked = 0;
  std::uint64_t vanishing = 0;
};

// Evaluates the quadric over every 6-subset of hyperplanes (or one given
// support) and all 15 pairings of each. Requires k = 3 and a generic
// arrangement. Entry order: supports lexicographic, pairings in
// pairings_of_six order; independent of the thread count.
QuadricScan quadric_scan(const Arrangement& a,
                         const std::optional<std::vector<int>>& support = {},
                         int threads = 1);

struct SingleMinorReport {
  std::vector<int> columns;  // the 3-column witness, 0-based sorted
  Rational value;
  bool dependent = false;
};

// For k = 3 and a good 4-block partition with empty tail: picks the
// lexicographically first support-column triple whose block pattern admits a
// system of distinct representatives and evaluates that single 3 x 3 minor
// of the triple matrix. For generic arrangements its vanishing already
// decides dependence (the support minors are all zero or all nonzero).
SingleMinorReport single_minor_criterion(const Arrangement& a,
                                         const GoodPartition& p);

}  // namespace hyperarr

#pragma once

#include <string>
#include <vector>

#include "hyperarr/arrangement.hpp"

namespace fixtures {

using hyperarr::Arrangement;
using hyperarr::Rational;
using hyperarr::Vec;

inline Vec row(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

// Six planes in R^3 built so that the normal pairs (1,2), (3,4), (5,6) have
// coplanar kernel directions; generic, with three dependent partitions.
inline Arrangement a_dep() {
  return Arrangement(3, {row({0, 1, 0}), row({0, 1, 1}), row({1, 0, 1}),
                         row({-1, 0, 1}), row({1, -1, 2}), row({2, -2, 1})});
}

// Moment-curve normals (1, t, t^2, ..., t^{k-1}) for t = 0..n-1.
inline Arrangement a_vdm(int n = 6, int k = 3) {
  std::vector<Vec> rows;
  for (int t = 0; t < n; ++t) {
    Vec r(k);
    Rational p(1);
    for (int c = 0; c < k; ++c) {
      r[c] = p;
      p *= Rational(t);
    }
    rows.push_back(std::move(r));
  }
  return Arrangement(k, std::move(rows));
}

// Four lines in R^2: a minimal fixture with a single codimension-2 stratum.
inline Arrangement a42() {
  return Arrangement(2, {row({1, 0}), row({0, 1}), row({1, 1}), row({1, -1})});
}

inline std::vector<Vec> to_rows(const Arrangement& a) {
  return a.normals();
}

inline std::string fixture_path(const char* name) {
  return std::string(HYPERARR_FIXTURE_DIR) + "/" + name;
}

}  // namespace fixtures

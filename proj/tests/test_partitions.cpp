#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hyperarr/discriminantal.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/generator.hpp"
#include "hyperarr/partitions.hpp"
#include "oracles.hpp"

using fixtures::row;
using hyperarr::Arrangement;
using hyperarr::enumerate_good_partitions;
using hyperarr::GoodPartition;
using hyperarr::Rational;

namespace {

GoodPartition t0() {
  return GoodPartition({{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}});
}

}  // namespace

TEST_CASE("good partitions canonicalize their presentation") {
  const GoodPartition p({{{5, 4, 3, 2}, {3, 2, 1, 0}, {5, 4, 1, 0}}});
  CHECK(p.s() == 2);
  CHECK(p.blocks() ==
        std::array<std::vector<int>, 3>{{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}});
  CHECK(p.tail().empty());
  CHECK(p == t0());
  const GoodPartition q({{{2, 3, 4, 5}, {0, 1, 4, 5}, {0, 1, 2, 3}}}, {7, 6});
  CHECK(q.tail() == std::vector<int>{6, 7});
  CHECK(q.blocks() == p.blocks());
  CHECK(p < q);  // equal blocks, empty tail sorts first
}

TEST_CASE("good partitions reject malformed block triples") {
  using hyperarr::DomainError;
  // wrong pairwise intersection size
  CHECK_THROWS_AS(GoodPartition({{{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 3, 4, 5}}}),
                  DomainError);
  // nonempty triple intersection
  CHECK_THROWS_AS(GoodPartition({{{0, 1, 2, 3}, {0, 1, 4, 5}, {0, 2, 4, 6}}}),
                  DomainError);
  // repeated index inside a block
  CHECK_THROWS_AS(GoodPartition({{{0, 1, 2, 2}, {0, 1, 4, 5}, {2, 3, 4, 5}}}),
                  DomainError);
  // negative index
  CHECK_THROWS_AS(GoodPartition({{{-1, 1, 2, 3}, {-1, 1, 4, 5}, {2, 3, 4, 5}}}),
                  DomainError);
  // unequal block sizes
  CHECK_THROWS_AS(GoodPartition({{{0, 1, 2}, {0, 1, 4, 5}, {2, 3, 4, 5}}}),
                  DomainError);
  // odd common block size
  CHECK_THROWS_AS(GoodPartition({{{0, 1, 2}, {0, 3, 4}, {1, 3, 5}}}), DomainError);
  // tail meets a block
  CHECK_THROWS_AS(GoodPartition({{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}}, {5}),
                  DomainError);
  // repeated tail index
  CHECK_THROWS_AS(GoodPartition({{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}}, {6, 6}),
                  DomainError);
}

TEST_CASE("pair intersections and support") {
  const GoodPartition p = t0();
  const auto inter = p.pair_intersections();
  CHECK(inter[0] == std::vector<int>{0, 1});
  CHECK(inter[1] == std::vector<int>{2, 3});
  CHECK(inter[2] == std::vector<int>{4, 5});
  CHECK(p.support() == std::vector<int>{0, 1, 2, 3, 4, 5});
  const GoodPartition one({{{0, 2}, {0, 7}, {2, 7}}});
  CHECK(one.s() == 1);
  CHECK(one.support() == std::vector<int>{0, 2, 7});
}

TEST_CASE("enumeration counts and canonical order") {
  const auto p6 = enumerate_good_partitions(6, 2);
  REQUIRE(p6.size() == 15);
  CHECK(std::is_sorted(p6.begin(), p6.end()));
  CHECK(p6.front() == t0());
  CHECK(p6[1] == GoodPartition({{{0, 1, 2, 3}, {0, 2, 4, 5}, {1, 3, 4, 5}}}));
  CHECK(p6.back() == GoodPartition({{{0, 1, 4, 5}, {0, 2, 3, 5}, {1, 2, 3, 4}}}));
  for (const auto& p : p6) {
    CHECK(p.s() == 2);
    CHECK(p.tail().empty());
  }
  CHECK(enumerate_good_partitions(7, 2).size() == 105);
  CHECK(enumerate_good_partitions(8, 2).size() == 420);
  CHECK(enumerate_good_partitions(6, 1).size() == 20);
  CHECK(enumerate_good_partitions(5, 2).empty());
  CHECK_THROWS_AS(enumerate_good_partitions(6, 0), hyperarr::DomainError);
}

TEST_CASE("triple matrix stacks the three derived normals") {
  const Arrangement dep = fixtures::a_dep();
  const GoodPartition p = t0();
  const auto m = triple_matrix(dep, p);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 6);
  CHECK(m.row(0) == discriminantal_normal(dep, {0, 1, 2, 3}));
  CHECK(m.row(1) == discriminantal_normal(dep, {0, 1, 4, 5}));
  CHECK(m.row(2) == discriminantal_normal(dep, {2, 3, 4, 5}));
  CHECK(rank(m) == 2);
  CHECK(rank(triple_matrix(fixtures::a_vdm(), p)) == 3);
  // arity must match: k = 3 needs |block| + |tail| = 4
  CHECK_THROWS_AS(triple_matrix(dep, GoodPartition({{{0, 2}, {0, 3}, {2, 3}}})),
                  hyperarr::DomainError);
  CHECK_THROWS_AS(
      triple_matrix(dep, GoodPartition({{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}},
                                       {6})),
      hyperarr::DomainError);
  CHECK_THROWS_AS(
      triple_matrix(dep, GoodPartition({{{0, 1, 2, 6}, {0, 1, 4, 5}, {2, 6, 4, 5}}})),
      hyperarr::DomainError);
}

TEST_CASE("minor square sum detects the planted dependency") {
  const GoodPartition p = t0();
  CHECK(minor_square_sum(fixtures::a_dep(), p) == Rational(0));
  CHECK(minor_square_sum(fixtures::a_vdm(), p) == Rational(4014080));
  for (const Arrangement& a : {fixtures::a_dep(), fixtures::a_vdm()})
    for (const auto& q : enumerate_good_partitions(6, 2))
      CHECK(minor_square_sum(a, q) ==
            oracle::triple_minor_square_sum(fixtures::to_rows(a), q.blocks()));
}

TEST_CASE("kernel triple bases are exact and deterministic") {
  const GoodPartition p = t0();
  const auto dep = kernel_triple(fixtures::a_dep(), p);
  for (const auto& b : dep.bases) REQUIRE(b.rows() == 1);
  CHECK(dep.bases[0].row(0) == row({1, 0, 0}));
  CHECK(dep.bases[1].row(0) == row({0, 1, 0}));
  CHECK(dep.bases[2].row(0) == row({1, 1, 0}));
  const auto vdm = kernel_triple(fixtures::a_vdm(), p);
  CHECK(vdm.bases[0].row(0) == row({0, -1, 1}));
  CHECK(vdm.bases[1].row(0) == row({6, -5, 1}));
  CHECK(vdm.bases[2].row(0) == row({20, -9, 1}));
  // each basis vector is orthogonal to the normals that cut it out
  const Arrangement a = fixtures::a_vdm();
  const auto inter = p.pair_intersections();
  for (int i = 0; i < 3; ++i)
    for (int j : inter[i])
      CHECK(dot(vdm.bases[i].row(0), a.normal(j)) == Rational(0));
}

TEST_CASE("kernel minor square sum matches the minor square sum verdict") {
  const GoodPartition p = t0();
  CHECK(kernel_minor_square_sum(fixtures::a_dep(), p) == Rational(0));
  CHECK(kernel_minor_square_sum(fixtures::a_vdm(), p) == Rational(1024));
  for (const Arrangement& a : {fixtures::a_dep(), fixtures::a_vdm()})
    for (const auto& q : enumerate_good_partitions(6, 2))
      CHECK(kernel_minor_square_sum(a, q).is_zero() ==
            minor_square_sum(a, q).is_zero());
}

TEST_CASE("dependence predicate on the fixtures") {
  const Arrangement dep = fixtures::a_dep();
  const Arrangement vdm = fixtures::a_vdm();
  CHECK(is_dependent(dep, t0()));
  CHECK_FALSE(is_dependent(vdm, t0()));
  const GoodPartition moment({{{0, 1, 4, 5}, {0, 2, 3, 5}, {1, 2, 3, 4}}});
  CHECK(is_dependent(vdm, moment));
  const GoodPartition other({{{0, 1, 2, 3}, {0, 2, 4, 5}, {1, 3, 4, 5}}});
  CHECK_FALSE(is_dependent(dep, other));
}

TEST_CASE("dependent-partition scan recovers the planted triples") {
  const auto dep = find_dependent(fixtures::a_dep());
  REQUIRE(dep.size() == 3);
  CHECK(dep[0] == GoodPartition({{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}}));
  CHECK(dep[1] == GoodPartition({{{0, 1, 2, 5}, {0, 3, 4, 5}, {1, 2, 3, 4}}}));
  CHECK(dep[2] == GoodPartition({{{0, 1, 3, 4}, {0, 2, 3, 5}, {1, 2, 4, 5}}}));
  CHECK(std::is_sorted(dep.begin(), dep.end()));
  const auto vdm = find_dependent(fixtures::a_vdm());
  REQUIRE(vdm.size() == 1);
  CHECK(vdm[0] == GoodPartition({{{0, 1, 4, 5}, {0, 2, 3, 5}, {1, 2, 3, 4}}}));
}

TEST_CASE("predicates agree for partitions with a tail") {
  // k = 4 admits s = 2 blocks with a one-element tail
  hyperarr::GenerateOptions opts;
  opts.kind = "random";
  opts.n = 7;
  opts.k = 4;
  opts.seed = 424242;
  const Arrangement a = hyperarr::generate(opts).arrangement;
  int checked = 0;
  for (const auto& p : enumerate_good_partitions(7, 2)) {
    std::vector<int> rest;
    for (int i = 0; i < 7; ++i) {
      const auto& sup = p.support();
      if (!std::binary_search(sup.begin(), sup.end(), i)) rest.push_back(i);
    }
    REQUIRE(rest.size() == 1);
    const GoodPartition q(p.blocks(), rest);
    const bool by_minors = minor_square_sum(a, q).is_zero();
    const bool by_kernels = kernel_minor_square_sum(a, q).is_zero();
    const bool by_rank = rank(triple_matrix(a, q)) == 2;
    const bool verdict = is_dependent(a, q);
    CHECK(by_minors == verdict);
    CHECK(by_kernels == verdict);
    CHECK(by_rank == verdict);
    ++checked;
  }
  CHECK(checked == 105);
}

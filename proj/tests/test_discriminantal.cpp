#include <doctest.h>

#include "fixtures.hpp"
#include "hyperarr/discriminantal.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/generator.hpp"
#include "hyperarr/subsets.hpp"
#include "oracles.hpp"

using fixtures::row;
using hyperarr::Arrangement;
using hyperarr::Rational;
using hyperarr::StrataCensus;
using hyperarr::Vec;

namespace {

using Census = std::map<int, std::uint64_t>;

Census plain(const StrataCensus& c) {
  return Census(c.census.begin(), c.census.end());
}

std::array<std::vector<int>, 3> triple(std::vector<int> a, std::vector<int> b,
                                       std::vector<int> c) {
  for (auto* v : {&a, &b, &c})
    for (int& x : *v) --x;  // tests written 1-based for readability
  return {a, b, c};
}

}  // namespace

TEST_CASE("derived normal carries signed determinants on its support") {
  const Arrangement dep = fixtures::a_dep();
  CHECK(discriminantal_normal(dep, {0, 1, 2, 3}) ==
        row({2, -2, 1, 1, 0, 0}));
  const Arrangement vdm = fixtures::a_vdm();
  CHECK(discriminantal_normal(vdm, {0, 1, 2, 3}) ==
        row({-2, 6, -6, 2, 0, 0}));
  // matches the independent cofactor-based construction everywhere
  for (const auto& L : hyperarr::subsets(6, 4)) {
    CHECK(discriminantal_normal(dep, L) ==
          oracle::alpha_row(fixtures::to_rows(dep), L));
    CHECK(discriminantal_normal(vdm, L) ==
          oracle::alpha_row(fixtures::to_rows(vdm), L));
  }
}

TEST_CASE("derived normal validates its index set") {
  const Arrangement dep = fixtures::a_dep();
  CHECK_THROWS_AS(discriminantal_normal(dep, {0, 1, 2}), hyperarr::DomainError);
  CHECK_THROWS_AS(discriminantal_normal(dep, {0, 1, 2, 6}), hyperarr::DomainError);
  CHECK_THROWS_AS(discriminantal_normal(dep, {0, 1, 1, 2}), hyperarr::DomainError);
  CHECK_THROWS_AS(discriminantal_normal(dep, {3, 1, 2, 0}), hyperarr::DomainError);
  const Arrangement bad(3, {row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1}),
                            row({1, 1, 0}), row({2, 1, 1})});
  CHECK_THROWS_AS(discriminantal_normal(bad, {0, 1, 2, 3}),
                  hyperarr::GenericityError);
}

TEST_CASE("every maximal minor of the derived matrix vanishes") {
  for (const Arrangement& a : {fixtures::a_dep(), fixtures::a_vdm()}) {
    const auto m = discriminantal_matrix(a);
    REQUIRE(m.rows() == 15);
    CHECK(rank(m) == 3);
    for (const auto& e : minors(m, 4)) CHECK(e.value.is_zero());
  }
}

TEST_CASE("census of the planted-dependency fixture") {
  const StrataCensus c = strata_census(fixtures::a_dep());
  CHECK(c.n == 6);
  CHECK(c.k == 3);
  CHECK(c.hyperplanes == 15);
  CHECK(plain(c) == Census{{5, 6}, {3, 3}, {2, 36}});
  REQUIRE(c.multiplicity3_triples.size() == 3);
  CHECK(c.multiplicity3_triples[0] ==
        triple({1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}));
  CHECK(c.multiplicity3_triples[1] ==
        triple({1, 2, 3, 6}, {1, 4, 5, 6}, {2, 3, 4, 5}));
  CHECK(c.multiplicity3_triples[2] ==
        triple({1, 2, 4, 5}, {1, 3, 4, 6}, {2, 3, 5, 6}));
  CHECK(c.members_retained);
}

TEST_CASE("census of the moment-curve fixture") {
  // pairs (0,5), (1,4), (2,3) of the parameter values share their sums, so
  // exactly one partition is dependent on the moment curve t = 0..5
  const StrataCensus c = strata_census(fixtures::a_vdm());
  CHECK(plain(c) == Census{{5, 6}, {3, 1}, {2, 42}});
  REQUIRE(c.multiplicity3_triples.size() == 1);
  CHECK(c.multiplicity3_triples[0] ==
        triple({1, 2, 5, 6}, {1, 3, 4, 6}, {2, 3, 4, 5}));
}

TEST_CASE("census of the n=7 moment curve") {
  const StrataCensus c = strata_census(fixtures::a_vdm(7));
  CHECK(c.hyperplanes == 35);
  CHECK(plain(c) == Census{{5, 21}, {3, 3}, {2, 376}});
  REQUIRE(c.multiplicity3_triples.size() == 3);
  CHECK(c.multiplicity3_triples[0] ==
        triple({1, 2, 5, 6}, {1, 3, 4, 6}, {2, 3, 4, 5}));
  CHECK(c.multiplicity3_triples[1] ==
        triple({1, 2, 6, 7}, {1, 3, 5, 7}, {2, 3, 5, 6}));
  CHECK(c.multiplicity3_triples[2] ==
        triple({2, 3, 6, 7}, {2, 4, 5, 7}, {3, 4, 5, 6}));
}

TEST_CASE("census of the minimal k=2 fixture") {
  const StrataCensus c = strata_census(fixtures::a42());
  CHECK(c.hyperplanes == 4);
  CHECK(plain(c) == Census{{4, 1}});
  CHECK(c.multiplicity3_triples.empty());
}

TEST_CASE("census agrees with the independent span-scan oracle") {
  for (const Arrangement& a :
       {fixtures::a_dep(), fixtures::a_vdm(), fixtures::a42()}) {
    const StrataCensus lib = strata_census(a);
    const oracle::SpanCensus ora = oracle::span_census(fixtures::to_rows(a), a.k());
    CHECK(plain(lib) == ora.census);
    REQUIRE(lib.multiplicity3_triples.size() == ora.triples.size());
    for (std::size_t i = 0; i < ora.triples.size(); ++i)
      CHECK(lib.multiplicity3_triples[i] == ora.triples[i]);
  }
}

TEST_CASE("census is identical for any thread count") {
  const Arrangement a = fixtures::a_vdm(7);
  hyperarr::CensusOptions one, four, nine;
  one.threads = 1;
  four.threads = 4;
  nine.threads = 9;
  const StrataCensus c1 = strata_census(a, one);
  const StrataCensus c4 = strata_census(a, four);
  const StrataCensus c9 = strata_census(a, nine);
  CHECK(plain(c1) == plain(c4));
  CHECK(plain(c1) == plain(c9));
  CHECK(c1.multiplicity3_triples == c4.multiplicity3_triples);
  CHECK(c1.multiplicity3_triples == c9.multiplicity3_triples);
  REQUIRE(c1.strata.size() == c4.strata.size());
  for (std::size_t i = 0; i < c1.strata.size(); ++i) {
    CHECK(c1.strata[i].span == c4.strata[i].span);
    CHECK(c1.strata[i].members == c4.strata[i].members);
  }
}

TEST_CASE("member lists are dropped beyond the retention bound") {
  hyperarr::CensusOptions tight;
  tight.member_retention_limit = 5;
  const StrataCensus c = strata_census(fixtures::a_dep(), tight);
  CHECK_FALSE(c.members_retained);
  CHECK(c.strata.empty());
  CHECK(c.multiplicity3_triples.size() == 3);  // always retained
  CHECK(plain(c) == Census{{5, 6}, {3, 3}, {2, 36}});
}

TEST_CASE("stratum member lists are consistent with their multiplicity") {
  const StrataCensus c = strata_census(fixtures::a_dep());
  Census recount;
  for (const auto& s : c.strata) {
    recount[static_cast<int>(s.members.size())] += 1;
    CHECK(std::is_sorted(s.members.begin(), s.members.end()));
    CHECK(s.span.rows() == 2);
  }
  CHECK(recount == plain(c));
}

TEST_CASE("triple rank distinguishes shared strata") {
  const Arrangement dep = fixtures::a_dep();
  CHECK(triple_codim(dep, {0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}) == 2);
  CHECK(triple_codim(dep, {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}) == 3);
  const Arrangement vdm = fixtures::a_vdm();
  CHECK(triple_codim(vdm, {0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}) == 3);
  CHECK(triple_codim(vdm, {0, 1, 4, 5}, {0, 2, 3, 5}, {1, 2, 3, 4}) == 2);
  CHECK_THROWS_AS(triple_codim(dep, {0, 1, 2, 3}, {0, 1, 2, 3}, {2, 3, 4, 5}),
                  hyperarr::DomainError);
}

TEST_CASE("random generic arrangements have the predicted top multiplicity") {
  // the count of strata where k+2 hyperplanes meet is C(n, k+2)
  struct Config {
    int n, k;
  };
  for (const Config cfg : {Config{6, 3}, Config{7, 3}, Config{5, 2}, Config{6, 2}}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      hyperarr::GenerateOptions opts;
      opts.kind = "random";
      opts.n = cfg.n;
      opts.k = cfg.k;
      opts.seed = seed * 101 + cfg.n * 10 + cfg.k;
      const Arrangement a = hyperarr::generate(opts).arrangement;
      const StrataCensus c = strata_census(a);
      CHECK(c.census.at(cfg.k + 2) == hyperarr::binomial(cfg.n, cfg.k + 2));
    }
  }
}

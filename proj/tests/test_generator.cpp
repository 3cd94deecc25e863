#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/generator.hpp"
#include "hyperarr/partitions.hpp"

using hyperarr::Arrangement;
using hyperarr::GenerateOptions;
using hyperarr::Rational;

namespace {

GenerateOptions opts(const char* kind, int n, int k, std::uint64_t seed) {
  GenerateOptions o;
  o.kind = kind;
  o.n = n;
  o.k = k;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("bounded draws are deterministic and unbiased in range") {
  hyperarr::Rng a(12345);
  hyperarr::Rng b(12345);
  hyperarr::Rng c(54321);
  std::set<long> seen;
  bool all_equal = true;
  for (int i = 0; i < 2000; ++i) {
    const long x = a.uniform(-4, 4);
    CHECK(x >= -4);
    CHECK(x <= 4);
    seen.insert(x);
    if (x != b.uniform(-4, 4)) all_equal = false;
    (void)c.uniform(-4, 4);
  }
  CHECK(all_equal);
  CHECK(seen.size() == 9);  // every value of [-4, 4] shows up in 2000 draws
  hyperarr::Rng d(7);
  CHECK(d.uniform(3, 3) == 3);
}

TEST_CASE("moment arrangements are the power rows") {
  const auto g = hyperarr::generate(opts("moment", 6, 3, 99));
  CHECK(g.arrangement.normals() == fixtures::a_vdm().normals());
  CHECK_FALSE(g.certificate.has_value());
  const auto g7 = hyperarr::generate(opts("moment", 7, 4, 0));
  CHECK(g7.arrangement.n() == 7);
  CHECK(g7.arrangement.k() == 4);
  CHECK(g7.arrangement.normal(6) ==
        hyperarr::Vec{Rational(1), Rational(6), Rational(36), Rational(216)});
  CHECK(is_generic(g7.arrangement));
}

TEST_CASE("random arrangements are generic, bounded, and seed-stable") {
  const auto a = hyperarr::generate(opts("random", 7, 3, 2024));
  const auto b = hyperarr::generate(opts("random", 7, 3, 2024));
  const auto c = hyperarr::generate(opts("random", 7, 3, 2025));
  CHECK(a.arrangement.normals() == b.arrangement.normals());
  CHECK(a.arrangement.normals() != c.arrangement.normals());
  CHECK(is_generic(a.arrangement));
  CHECK_FALSE(a.certificate.has_value());
  for (const auto& row : a.arrangement.normals())
    for (const auto& x : row) {
      CHECK(abs(x) <= Rational(9));
      CHECK(x.is_integer());
    }
}

TEST_CASE("dependent arrangements carry a verified certificate") {
  for (int n : {6, 7, 8}) {
    for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
      const auto g = hyperarr::generate(opts("dependent", n, 3, seed));
      CHECK(g.arrangement.n() == n);
      CHECK(g.arrangement.k() == 3);
      CHECK(is_generic(g.arrangement));
      REQUIRE(g.certificate.has_value());
      CHECK(g.certificate->blocks() ==
            std::array<std::vector<int>, 3>{
                {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}});
      CHECK(g.certificate->tail().empty());
      CHECK(is_dependent(g.arrangement, *g.certificate));
    }
  }
  const auto a = hyperarr::generate(opts("dependent", 6, 3, 5));
  const auto b = hyperarr::generate(opts("dependent", 6, 3, 5));
  CHECK(a.arrangement.normals() == b.arrangement.normals());
}

TEST_CASE("generation rejects bad requests") {
  using hyperarr::DomainError;
  CHECK_THROWS_AS(hyperarr::generate(opts("maximal", 6, 3, 0)), DomainError);
  CHECK_THROWS_AS(hyperarr::generate(opts("", 6, 3, 0)), DomainError);
  CHECK_THROWS_AS(hyperarr::generate(opts("dependent", 6, 4, 0)), DomainError);
  CHECK_THROWS_AS(hyperarr::generate(opts("dependent", 5, 3, 0)), DomainError);
  CHECK_THROWS_AS(hyperarr::generate(opts("random", 3, 3, 0)), DomainError);
  CHECK_THROWS_AS(hyperarr::generate(opts("random", 6, 0, 0)), DomainError);
  GenerateOptions bad = opts("random", 6, 3, 0);
  bad.max_attempts = 0;
  CHECK_THROWS_AS(hyperarr::generate(bad), DomainError);
}

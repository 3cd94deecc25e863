#include "hyperarr/generator.hpp"

#include <limits>

#include "hyperarr/errors.hpp"

namespace hyperarr {

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw DomainError("rng: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return lo + static_cast<long>(eng_());  // full 64-bit span
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() / range * range;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return lo + static_cast<long>(x % range);
}

namespace {

Vec random_vec(Rng& rng, int k, long bound) {
  Vec v(k);
  for (int i = 0; i < k; ++i) v[i] = Rational(rng.uniform(-bound, bound));
  return v;
}

Vec random_nonzero_vec(Rng& rng, int k, long bound) {
  for (;;) {
    Vec v = random_vec(rng, k, bound);
    if (!is_zero_vec(v)) return v;
  }
}

bool independent_pair(const Vec& a, const Vec& b) {
  return rank(Matrix({a, b})) == 2;
}

Generated generate_moment(const GenerateOptions& opts) {
  std::vector<Vec> rows;
  rows.reserve(opts.n);
  for (int t = 0; t < opts.n; ++t) {
    Vec row(opts.k);
    Rational power(1);
    for (int c = 0; c < opts.k; ++c) {
      row[c] = power;
      power *= Rational(t);
    }
    rows.push_back(std::move(row));
  }
  Arrangement a(opts.k, std::move(rows));
  if (!is_generic(a)) throw GenerationError("generate: moment rows not generic");
  return {std::move(a), std::nullopt};
}

Generated generate_random(const GenerateOptions& opts) {
  Rng rng(opts.seed);
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::vector<Vec> rows;
    rows.reserve(opts.n);
    for (int i = 0; i < opts.n; ++i) rows.push_back(random_nonzero_vec(rng, opts.k, 9));
    Arrangement a(opts.k, std::move(rows));
    if (is_generic(a)) return {std::move(a), std::nullopt};
  }
  throw GenerationError("generate: no generic draw within the attempt budget");
}

Generated generate_dependent(const GenerateOptions& opts) {
  if (opts.k != 3)
    throw DomainError("generate: kind 'dependent' is defined for k = 3 only");
  if (opts.n < 6)
    throw DomainError("generate: kind 'dependent' needs n >= 6");
  Rng rng(opts.seed);
  const GoodPartition certificate(
      std::array<std::vector<int>, 3>{{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}});

  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    // A common plane span{u, v} to hold all three kernel directions.
    Vec u = random_nonzero_vec(rng, 3, 4);
    Vec v = random_nonzero_vec(rng, 3, 4);
    if (!independent_pair(u, v)) continue;

    std::vector<Vec> dirs;
    while (dirs.size() < 3) {
      const long c1 = rng.uniform(-3, 3), c2 = rng.uniform(-3, 3);
      Vec d(3);
      for (int i = 0; i < 3; ++i)
        d[i] = Rational(c1) * u[i] + Rational(c2) * v[i];
      if (is_zero_vec(d)) continue;
      bool fresh = true;
      for (const Vec& prev : dirs)
        if (!independent_pair(prev, d)) fresh = false;
      if (fresh) dirs.push_back(std::move(d));
    }

    // Two independent integer normals orthogonal to each direction: the
    // pair's kernel is then exactly the line through that direction.
    std::vector<Vec> rows;
    for (const Vec& d : dirs) {
      const auto ortho = nullspace(Matrix({d}));
      const Vec w1 = primitive_integer_vector(ortho[0]);
      const Vec w2 = primitive_integer_vector(ortho[1]);
      Vec first, second;
      do {
        const long a1 = rng.uniform(-3, 3), b1 = rng.uniform(-3, 3);
        first = Vec(3);
        for (int i = 0; i < 3; ++i)
          first[i] = Rational(a1) * w1[i] + Rational(b1) * w2[i];
      } while (is_zero_vec(first));
      do {
        const long a2 = rng.uniform(-3, 3), b2 = rng.uniform(-3, 3);
        second = Vec(3);
        for (int i = 0; i < 3; ++i)
          second[i] = Rational(a2) * w1[i] + Rational(b2) * w2[i];
      } while (is_zero_vec(second) || !independent_pair(first, second));
      rows.push_back(std::move(first));
      rows.push_back(std::move(second));
    }
    for (int i = 6; i < opts.n; ++i) rows.push_back(random_nonzero_vec(rng, 3, 9));

    Arrangement a(3, std::move(rows));
    if (!is_generic(a)) continue;
    if (!is_dependent(a, certificate))
      throw Error("generate: planted certificate failed verification");
    return {std::move(a), certificate};
  }
  throw GenerationError("generate: no generic draw within the attempt budget");
}

}  // namespace

Generated generate(const GenerateOptions& opts) {
  if (opts.k < 1) throw DomainError("generate: k must be >= 1");
  if (opts.n <= opts.k) throw DomainError("generate: need n > k");
  if (opts.max_attempts < 1) throw DomainError("generate: attempt budget must be >= 1");
  if (opts.kind == "moment") return generate_moment(opts);
  if (opts.kind == "random") return generate_random(opts);
  if (opts.kind == "dependent") return generate_dependent(opts);
  throw DomainError("generate: unknown kind '" + opts.kind +
                    "' (expected dependent, moment, or random)");
}

}  // namespace hyperarr

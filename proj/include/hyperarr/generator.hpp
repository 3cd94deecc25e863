#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/partitions.hpp"

namespace hyperarr {

// Deterministic bounded draws on top of the fixed mt19937_64 stream; the
// standard distributions are implementation-defined, so results would not be
// reproducible across library versions through them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform over [lo, hi], unbiased via rejection.
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 eng_;
};

struct GenerateOptions {
  std::string kind;  // "dependent" | "moment" | "random"
  int n = 6;
  int k = 3;
  std::uint64_t seed = 0;
  int max_attempts = 200;
};

struct Generated {
  Arrangement arrangement;
  // For kind "dependent": the planted partition, verified dependent.
  std::optional<GoodPartition> certificate;
};

// kind "moment":    rows (1, t, t^2, ..., t^{k-1}) for t = 0..n-1; generic by
//                   construction, no randomness.
// kind "random":    small integer entries redrawn until generic.
// kind "dependent": k = 3 only; three pairs of normals are built orthogonal
//                   to three coplanar directions, so the pairs' kernels lie
//                   in one plane and the certificate partition is dependent;
//                   remaining normals are random; redrawn until generic.
// Same options -> same arrangement, bit for bit. Throws GenerationError when
// max_attempts rejections pass without a generic draw.
Generated generate(const GenerateOptions& opts);

}  // namespace hyperarr

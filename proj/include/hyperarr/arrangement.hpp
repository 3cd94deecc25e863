#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperarr/matrix.hpp"

namespace hyperarr {

// Central hyperplane arrangement in R^k given by one normal vector per
// hyperplane. Immutable once constructed; safe to share across threads.
class Arrangement {
 public:
  Arrangement(int k, std::vector<Vec> normals,
              std::vector<std::string> labels = {});

  int n() const { return static_cast<int>(normals_.size()); }
  int k() const { return k_; }
  const Vec& normal(int i) const { return normals_[i]; }
  const std::vector<Vec>& normals() const { return normals_; }
  const std::vector<std::string>& labels() const { return labels_; }  // may be empty

  Matrix normal_matrix() const;  // n x k, row i = normal(i)

  // Cached genericity verdict, maintained by check_generic so hot paths that
  // re-assert the precondition don't rescan every k-subset. 0 = unknown,
  // 1 = generic, 2 = not generic. Shared across copies; the normals are
  // immutable, so the verdict never goes stale.
  std::atomic<int>& genericity_cache() const { return *genericity_; }

 private:
  int k_;
  std::vector<Vec> normals_;
  std::vector<std::string> labels_;
  mutable std::shared_ptr<std::atomic<int>> genericity_ =
      std::make_shared<std::atomic<int>>(0);
};

struct GenericityReport {
  bool generic = false;
  // Lexicographically first k-subset of rows (0-based) with vanishing
  // determinant; empty when generic.
  std::vector<int> witness;
};

// An arrangement is generic when every k of its normals are linearly
// independent.
GenericityReport check_generic(const Arrangement& a);
bool is_generic(const Arrangement& a);

// Throws GenericityError (naming the witness) unless a is generic.
void require_generic(const Arrangement& a, const char* op);

}  // namespace hyperarr

#include "hyperarr/arrangement.hpp"

#include <sstream>

#include "hyperarr/errors.hpp"
#include "hyperarr/subsets.hpp"

namespace hyperarr {

Arrangement::Arrangement(int k, std::vector<Vec> normals,
                         std::vector<std::string> labels)
    : k_(k), normals_(std::move(normals)), labels_(std::move(labels)) {
  if (k_ < 1) throw DomainError("arrangement: ambient dimension must be >= 1");
  if (static_cast<int>(normals_.size()) <= k_)
    throw DomainError("arrangement: need more hyperplanes than the ambient dimension");
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (static_cast<int>(normals_[i].size()) != k_)
      throw DimensionError("arrangement: normal " + std::to_string(i + 1) +
                           " has wrong length");
    if (is_zero_vec(normals_[i]))
      throw DomainError("arrangement: normal " + std::to_string(i + 1) + " is zero");
  }
  if (!labels_.empty() && labels_.size() != normals_.size())
    throw DimensionError("arrangement: label count does not match hyperplane count");
}

Matrix Arrangement::normal_matrix() const {
  return Matrix(normals_);
}

GenericityReport check_generic(const Arrangement& a) {
  const Matrix m = a.normal_matrix();
  std::vector<int> all_cols(a.k());
  for (int c = 0; c < a.k(); ++c) all_cols[c] = c;
  for (const auto& rows : subsets(a.n(), a.k())) {
    if (det(submatrix(m, rows, all_cols)).is_zero()) {
      a.genericity_cache().store(2);
      return {false, rows};
    }
  }
  a.genericity_cache().store(1);
  return {true, {}};
}

bool is_generic(const Arrangement& a) {
  const int cached = a.genericity_cache().load();
  if (cached != 0) return cached == 1;
  return check_generic(a).generic;
}

void require_generic(const Arrangement& a, const char* op) {
  if (a.genericity_cache().load() == 1) return;
  const GenericityReport r = check_generic(a);
  if (r.generic) return;
  std::ostringstream msg;
  msg << op << ": arrangement is not generic (normals";
  for (int i : r.witness) msg << ' ' << (i + 1);
  msg << " are linearly dependent)";
  throw GenericityError(msg.str());
}

}  // namespace hyperarr

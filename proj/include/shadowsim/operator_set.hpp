#pragma once

#include <string>
#include <vector>

#include "shadowsim/types.hpp"

namespace shadowsim {

// A finite family {O_m} of operators on one Hilbert space, materialized
// densely. Only used at oracle scale; index-level pathways never build it.
struct OperatorSet {
  std::vector<std::string> labels;
  std::vector<Matrix> ops;

  int size() const { return static_cast<int>(ops.size()); }
  int dim() const { return ops.empty() ? 0 : static_cast<int>(ops[0].rows()); }
};

// Checks tr(O_j^dag O_k) = lambda delta_jk and returns lambda.
// Tolerance is relative to max(1, lambda).
double verify_orthogonality(const OperatorSet& set, double tol = 1e-10);

}  // namespace shadowsim

#include "shadowsim/operator_set.hpp"

#include <cmath>

namespace shadowsim {

double verify_orthogonality(const OperatorSet& set, double tol) {
  require(set.size() > 0, "operator set: empty");
  require(set.labels.size() == set.ops.size(),
          "operator set: label/operator count mismatch");
  const int dim = set.dim();
  for (const Matrix& op : set.ops) {
    require(op.rows() == dim && op.cols() == dim,
            "operator set: inconsistent operator dimensions");
  }
  const double lambda = std::real((set.ops[0].adjoint() * set.ops[0]).trace());
  const double gate = tol * std::max(1.0, std::abs(lambda));
  for (int j = 0; j < set.size(); ++j) {
    for (int k = j; k < set.size(); ++k) {
      const cplx g = (set.ops[j].adjoint() * set.ops[k]).trace();
      const cplx want = j == k ? cplx(lambda, 0.0) : cplx(0.0, 0.0);
      if (std::abs(g - want) > gate) {
        throw Error("operator set: orthogonality violated at (" +
                    set.labels[j] + ", " + set.labels[k] + ")");
      }
    }
  }
  return lambda;
}

}  // namespace shadowsim

#ifndef LIEHOM_REPRESENTATION_HPP
#define LIEHOM_REPRESENTATION_HPP

#include <optional>
#include <vector>

#include "liehom/lie_algebra.hpp"

namespace liehom {

/// First basis pair violating the commutator axiom.
struct RepViolation {
  int i;
  int j;
};

/// Finite-dimensional module over a Lie algebra, one action matrix per
/// algebra basis element.
class Representation {
 public:
  Representation(LieAlgebra algebra, Index dim,
                 std::vector<SparseMatrix> action);

  const LieAlgebra& algebra() const { return algebra_; }
  Index dim() const { return dim_; }
  const SparseMatrix& action(int i) const {
    return action_[static_cast<std::size_t>(i)];
  }
  const std::vector<SparseMatrix>& actions() const { return action_; }

  friend bool operator==(const Representation&, const Representation&) =
      default;

 private:
  LieAlgebra algebra_;
  Index dim_;
  std::vector<SparseMatrix> action_;
};

/// nullopt iff rho([e_i,e_j]) = rho_i rho_j - rho_j rho_i for all pairs.
std::optional<RepViolation> validate_rep(const Representation& m);

/// rho_i = ad e_i, assembled from the structure constants.
Representation adjoint_rep(const LieAlgebra& g);

/// Zero action on a k-dimensional space.
Representation trivial_rep(const LieAlgebra& g, Index k);

/// Dual module: rho*_i = -(rho_i)^T.
Representation dual_rep(const Representation& m);

/// Tensor product module: rho_i (x) I + I (x) sigma_i.
Representation tensor_rep(const Representation& m, const Representation& n);

}  // namespace liehom

#endif

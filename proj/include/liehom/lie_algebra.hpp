#ifndef LIEHOM_LIE_ALGEBRA_HPP
#define LIEHOM_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liehom/sparse.hpp"

namespace liehom {

/// First failing Jacobi triple and its residual vector.
struct JacobiViolation {
  int i;
  int j;
  int k;
  SparseVector residual;
};

/// Finite-dimensional Lie algebra given by rational structure constants.
/// Brackets are stored for pairs i < j only; antisymmetry is structural.
class LieAlgebra {
 public:
  /// Coefficient vector of [e_i, e_j], keyed by (i, j) with i < j.
  /// Absent pairs bracket to zero.
  using BracketTable = std::map<std::pair<int, int>, SparseVector>;

  LieAlgebra(int dim, std::vector<std::string> labels, BracketTable brackets);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& stored_brackets() const { return brackets_; }

  /// [e_i, e_j] for any pair, with the sign flip for i > j.
  SparseVector bracket_basis(int i, int j) const;

  /// Bilinear extension of the bracket.
  SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  BracketTable brackets_;
};

/// nullopt iff the Jacobi identity holds on every basis triple.
std::optional<JacobiViolation> validate_lie(const LieAlgebra& g);

enum class StandardName { abelian, sl2, heisenberg, two_dim_nonabelian };

/// The named algebra. `n` is the dimension for `abelian` and ignored
/// otherwise. Conventions: sl2 has basis (e,h,f) with [h,e]=2e, [h,f]=-2f,
/// [e,f]=h; heisenberg has (x,y,z) with [x,y]=z; two_dim_nonabelian has
/// (a,b) with [a,b]=b.
LieAlgebra standard_algebra(StandardName name, int n = 0);

/// kappa_{ij} = trace(ad e_i compose ad e_j); symmetric.
SparseMatrix killing_form(const LieAlgebra& g);

/// Dimensions of g, [g,g], [[g,g],[g,g]], ... until stabilization.
std::vector<int> derived_series(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);

/// true iff [g,g] = g.
bool is_perfect(const LieAlgebra& g);

/// Basis of {x : kappa(x, y) = 0 for all y in [g,g]} -- the solvable
/// radical in characteristic zero.
std::vector<SparseVector> radical(const LieAlgebra& g);

/// Basis of the span of all brackets of the given subspace basis vectors.
std::vector<SparseVector> bracket_span(const LieAlgebra& g,
                                       const std::vector<SparseVector>& basis);

/// true iff [g, span(basis)] lies inside span(basis).
bool spans_ideal(const LieAlgebra& g, const std::vector<SparseVector>& basis);

/// Lie algebra structure induced on the span of `basis`, coordinates taken
/// in that basis; nullopt when the span is not closed under the bracket.
std::optional<LieAlgebra> subalgebra_on(const LieAlgebra& g,
                                        const std::vector<SparseVector>& basis,
                                        std::vector<std::string> labels);

}  // namespace liehom

#endif

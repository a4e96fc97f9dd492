#include "liehom/representation.hpp"

namespace liehom {

Representation::Representation(LieAlgebra algebra, Index dim,
                               std::vector<SparseMatrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  if (dim < 0) throw DimensionMismatch("Representation: negative dimension");
  if (static_cast<int>(action_.size()) != algebra_.dim())
    throw DimensionMismatch(
        "Representation: need one action matrix per basis element");
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw DimensionMismatch("Representation: action matrix shape != dim x dim");
}

std::optional<RepViolation> validate_rep(const Representation& m) {
  const LieAlgebra& g = m.algebra();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      SparseMatrix lhs(m.dim(), m.dim());
      for (const auto& [k, c] : g.bracket_basis(i, j).entries())
        for (Index r = 0; r < m.dim(); ++r)
          for (const auto& [cc, v] : m.action(static_cast<int>(k)).row(r))
            lhs.add(r, cc, c * v);
      SparseMatrix comm = matmul(m.action(i), m.action(j));
      const SparseMatrix ji = matmul(m.action(j), m.action(i));
      for (Index r = 0; r < m.dim(); ++r)
        for (const auto& [cc, v] : ji.row(r)) comm.add(r, cc, -v);
      if (!(lhs == comm)) return RepViolation{i, j};
    }
  return std::nullopt;
}

Representation adjoint_rep(const LieAlgebra& g) {
  std::vector<SparseMatrix> action;
  action.reserve(static_cast<std::size_t>(g.dim()));
  for (int i = 0; i < g.dim(); ++i) {
    SparseMatrix m(g.dim(), g.dim());
    for (int j = 0; j < g.dim(); ++j)
      for (const auto& [k, c] : g.bracket_basis(i, j).entries())
        m.add(k, j, c);
    action.push_back(std::move(m));
  }
  return Representation(g, g.dim(), std::move(action));
}

Representation trivial_rep(const LieAlgebra& g, Index k) {
  std::vector<SparseMatrix> action(static_cast<std::size_t>(g.dim()),
                                   SparseMatrix(k, k));
  return Representation(g, k, std::move(action));
}

Representation dual_rep(const Representation& m) {
  std::vector<SparseMatrix> action;
  action.reserve(m.actions().size());
  for (const auto& a : m.actions()) {
    SparseMatrix t = transpose(a);
    SparseMatrix neg(t.rows(), t.cols());
    for (Index r = 0; r < t.rows(); ++r)
      for (const auto& [c, v] : t.row(r)) neg.add(r, c, -v);
    action.push_back(std::move(neg));
  }
  return Representation(m.algebra(), m.dim(), std::move(action));
}

Representation tensor_rep(const Representation& m, const Representation& n) {
  if (!(m.algebra() == n.algebra()))
    throw DimensionMismatch("tensor_rep: factors over different algebras");
  std::vector<SparseMatrix> action;
  const SparseMatrix im = SparseMatrix::identity(m.dim());
  const SparseMatrix in = SparseMatrix::identity(n.dim());
  for (int i = 0; i < m.algebra().dim(); ++i)
    action.push_back(kron(m.action(i), in) + kron(im, n.action(i)));
  return Representation(m.algebra(), m.dim() * n.dim(), std::move(action));
}

}  // namespace liehom

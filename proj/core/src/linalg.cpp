#include "susyspec/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace susyspec {

LinearOp adjoint(const LinearOp& x) { return x.adjoint(); }

LinearOp commutator(const LinearOp& x, const LinearOp& y) {
  if (x.cols() != y.rows() || y.cols() != x.rows())
    throw std::invalid_argument("commutator: dimension mismatch");
  return x * y - y * x;
}

LinearOp anticommutator(const LinearOp& x, const LinearOp& y) {
  if (x.cols() != y.rows() || y.cols() != x.rows())
    throw std::invalid_argument("anticommutator: dimension mismatch");
  return x * y + y * x;
}

double operator_norm(const LinearOp& x) {
  if (x.size() == 0) return 0.0;
  Eigen::JacobiSVD<LinearOp> svd(x);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

Vector vectorize(const LinearOp& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

LinearOp unvectorize(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("unvectorize: size mismatch");
  return Eigen::Map<const LinearOp>(v.data(), rows, cols);
}

LinearOp kronecker(const LinearOp& a, const LinearOp& b) {
  LinearOp out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron_vec(const Vector& x, const Vector& y) {
  Vector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out.segment(i * y.size(), y.size()) = x(i) * y;
  return out;
}

Subspace span_closure(const LinearOp& columns, const Tolerance& tol) {
  const Eigen::Index ambient = columns.rows();
  if (columns.cols() == 0 || ambient == 0)
    return Subspace(LinearOp(ambient, 0), ambient, tol.rank_tol);
  Eigen::BDCSVD<LinearOp> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= tol.rank_tol)
    return Subspace(LinearOp(ambient, 0), ambient, tol.rank_tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > tol.rank_tol * s(0)) ++rank;
  return Subspace(svd.matrixU().leftCols(rank), ambient, tol.rank_tol);
}

Subspace span_closure(const std::vector<Vector>& vectors, Eigen::Index ambient,
                      const Tolerance& tol) {
  LinearOp cols(ambient, static_cast<Eigen::Index>(vectors.size()));
  for (Eigen::Index k = 0; k < cols.cols(); ++k) {
    if (vectors[static_cast<size_t>(k)].size() != ambient)
      throw std::invalid_argument("span_closure: inconsistent ambient dimension");
    cols.col(k) = vectors[static_cast<size_t>(k)];
  }
  return span_closure(cols, tol);
}

QuotientByResult quotient_by(Eigen::Index ambient_dim, const Subspace& relations) {
  if (relations.dim() > 0 && relations.ambient_dim() != ambient_dim)
    throw std::invalid_argument("quotient_by: relations not inside ambient space");
  QuotientByResult out;
  LinearOp id = LinearOp::Identity(ambient_dim, ambient_dim);
  if (relations.dim() == 0) {
    out.projector = id;
    out.section = id;
    out.rank = ambient_dim;
    return out;
  }
  const LinearOp& b = relations.basis();
  out.projector = id - b * b.adjoint();
  // kernel eigenvectors of the relation Gram give a deterministic section
  Eigen::SelfAdjointEigenSolver<LinearOp> es(b * b.adjoint());
  out.rank = ambient_dim - relations.dim();
  out.section = es.eigenvectors().leftCols(out.rank);
  return out;
}

OpEquality op_equal(const LinearOp& x, const LinearOp& y, const Tolerance& tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("op_equal: dimension mismatch");
  OpEquality r;
  r.residual = operator_norm(LinearOp(x - y));
  r.equal = r.residual <= tol.eq_tol;
  return r;
}

LinearOp common_range_complement(const std::vector<LinearOp>& ops,
                                 Eigen::Index ambient, const Tolerance& tol) {
  LinearOp k = LinearOp::Zero(ambient, ambient);
  for (const auto& m : ops) k += m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<LinearOp> es(k);
  const auto& w = es.eigenvalues();
  const double scale = std::max(w.size() ? w(w.size() - 1) : 0.0, 1.0);
  Eigen::Index dim = 0;
  while (dim < w.size() && w(dim) <= tol.rank_tol * scale) ++dim;
  return es.eigenvectors().leftCols(dim);
}

}  // namespace susyspec

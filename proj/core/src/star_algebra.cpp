#include "susyspec/star_algebra.hpp"

namespace susyspec {

void StarAlgebra::orthonormalize_from(const std::vector<LinearOp>& spanning) {
  std::vector<Vector> cols;
  cols.reserve(spanning.size());
  for (const auto& m : spanning) cols.push_back(vectorize(m));
  Subspace s = span_closure(cols, hilbert_dim_ * hilbert_dim_, tol_);
  basis_.clear();
  for (Eigen::Index k = 0; k < s.dim(); ++k)
    basis_.push_back(unvectorize(s.basis().col(k), hilbert_dim_, hilbert_dim_));
  contains_identity_ =
      s.contains(vectorize(LinearOp::Identity(hilbert_dim_, hilbert_dim_)),
                 hilbert_dim_ * tol_.eq_tol);
}

StarAlgebra StarAlgebra::generate(const std::vector<LinearOp>& generators,
                                  const Tolerance& tol) {
  if (generators.empty()) throw std::invalid_argument("generate: no generators");
  const Eigen::Index n = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("generate: generator dimension mismatch");

  StarAlgebra a;
  a.hilbert_dim_ = n;
  a.tol_ = tol;

  std::vector<LinearOp> current;
  current.push_back(LinearOp::Identity(n, n));
  current.insert(current.end(), generators.begin(), generators.end());
  a.orthonormalize_from(current);

  while (true) {
    const Eigen::Index before = a.dim();
    std::vector<LinearOp> extended = a.basis_;
    for (const auto& x : a.basis_) {
      extended.push_back(x.adjoint());
      for (const auto& y : a.basis_) extended.push_back(x * y);
    }
    a.orthonormalize_from(extended);
    if (a.dim() == before) break;
  }
  return a;
}

StarAlgebra StarAlgebra::tensor(const StarAlgebra& a1, const StarAlgebra& a2,
                                const Tolerance& tol) {
  StarAlgebra a;
  a.hilbert_dim_ = a1.hilbert_dim() * a2.hilbert_dim();
  a.tol_ = tol;
  std::vector<LinearOp> prods;
  prods.reserve(static_cast<size_t>(a1.dim() * a2.dim()));
  for (const auto& x : a1.basis())
    for (const auto& y : a2.basis()) prods.push_back(kronecker(x, y));
  a.orthonormalize_from(prods);
  return a;
}

StarAlgebra::Membership StarAlgebra::membership(const LinearOp& x) const {
  if (x.rows() != hilbert_dim_ || x.cols() != hilbert_dim_)
    throw std::invalid_argument("membership: dimension mismatch");
  Membership m;
  m.element.coeffs = Vector(dim());
  for (Eigen::Index k = 0; k < dim(); ++k)
    m.element.coeffs(k) = hs_inner(basis_[static_cast<size_t>(k)], x);
  m.element.realized = realize(m.element.coeffs);
  m.residual = operator_norm(LinearOp(x - m.element.realized));
  m.accepted = m.residual <= tol_.eq_tol;
  return m;
}

LinearOp StarAlgebra::realize(const Vector& coeffs) const {
  LinearOp out = LinearOp::Zero(hilbert_dim_, hilbert_dim_);
  for (Eigen::Index k = 0; k < dim(); ++k)
    out += coeffs(k) * basis_[static_cast<size_t>(k)];
  return out;
}

AlgebraElement StarAlgebra::identity() const {
  Membership m = membership(LinearOp::Identity(hilbert_dim_, hilbert_dim_));
  return m.element;
}

double StarAlgebra::identity_residual() const {
  return membership(LinearOp::Identity(hilbert_dim_, hilbert_dim_)).residual;
}

double StarAlgebra::adjoint_closure_residual() const {
  double worst = 0.0;
  for (const auto& x : basis_)
    worst = std::max(worst, membership(x.adjoint()).residual);
  return worst;
}

double StarAlgebra::product_closure_residual() const {
  double worst = 0.0;
  for (const auto& x : basis_)
    for (const auto& y : basis_)
      worst = std::max(worst, membership(x * y).residual);
  return worst;
}

bool StarAlgebra::faithful() const {
  // basis ops are HS-orthonormal, so only the zero coefficient vector realizes
  // an operator of norm below the rank cutoff
  for (const auto& x : basis_)
    if (operator_norm(x) <= tol_.rank_tol) return false;
  return true;
}

}  // namespace susyspec

#ifndef SUSYSPEC_STAR_ALGEBRA_HPP
#define SUSYSPEC_STAR_ALGEBRA_HPP

#include <vector>

#include "susyspec/linalg.hpp"

namespace susyspec {

struct AlgebraElement {
  Vector coeffs;      // over the algebra basis
  LinearOp realized;
};

/// A unital *-closed matrix subalgebra, held as a Hilbert-Schmidt orthonormal
/// basis of concrete operators. The algebra and its representation are
/// identified throughout.
class StarAlgebra {
 public:
  StarAlgebra() = default;

  /// Smallest *-closed unital algebra containing the generators, computed by
  /// iterating products and adjoints through span closure until the dimension
  /// stabilizes (bounded by hilbert_dim^2).
  static StarAlgebra generate(const std::vector<LinearOp>& generators,
                              const Tolerance& tol);

  /// Tensor product algebra: pairwise Kronecker products of the bases.
  static StarAlgebra tensor(const StarAlgebra& a1, const StarAlgebra& a2,
                            const Tolerance& tol);

  Eigen::Index hilbert_dim() const { return hilbert_dim_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<LinearOp>& basis() const { return basis_; }
  const LinearOp& basis_op(Eigen::Index k) const { return basis_[static_cast<size_t>(k)]; }
  bool contains_identity() const { return contains_identity_; }
  bool is_full_matrix_algebra() const { return dim() == hilbert_dim_ * hilbert_dim_; }
  const Tolerance& tol() const { return tol_; }

  struct Membership {
    bool accepted = false;
    double residual = 0.0;
    AlgebraElement element;
  };
  /// Least-squares coefficients over the orthonormal basis; accepted iff the
  /// reconstruction residual is within eq_tol.
  Membership membership(const LinearOp& x) const;

  LinearOp realize(const Vector& coeffs) const;
  AlgebraElement identity() const;

  /// Residuals of the structural invariants: identity in span, adjoint
  /// closure, product closure, faithfulness (trivial realization kernel).
  double identity_residual() const;
  double adjoint_closure_residual() const;
  double product_closure_residual() const;
  bool faithful() const;

 private:
  Eigen::Index hilbert_dim_ = 0;
  std::vector<LinearOp> basis_;
  bool contains_identity_ = false;
  Tolerance tol_;

  void orthonormalize_from(const std::vector<LinearOp>& spanning);
};

}  // namespace susyspec

#endif

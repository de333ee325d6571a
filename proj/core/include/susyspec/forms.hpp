#ifndef SUSYSPEC_FORMS_HPP
#define SUSYSPEC_FORMS_HPP

#include "susyspec/n1.hpp"

namespace susyspec {

/// The bimodule of noncommutative one-forms span{a [D,b]}, held as a
/// Hilbert-Schmidt orthonormal operator basis.
class OneForms {
 public:
  OneForms() = default;
  OneForms(const N1Data& data, const Tolerance& tol);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<LinearOp>& basis() const { return basis_; }
  const LinearOp& basis_op(Eigen::Index k) const { return basis_[static_cast<size_t>(k)]; }
  Eigen::Index hilbert_dim() const { return hilbert_dim_; }

  /// Coordinates of an operator in the one-form basis, with the residual of
  /// its best approximation inside the span.
  struct Coords {
    Vector coeffs;
    double residual = 0.0;
  };
  Coords coords(const LinearOp& omega) const;
  LinearOp realize(const Vector& coeffs) const;

  /// d(a) = [D, a] expressed in the one-form basis.
  Coords dirac_d(const LinearOp& a) const;

  /// Left/right multiplication by an algebra element, as matrices acting on
  /// one-form coordinates. Residual reports any failure of bimodule closure.
  LinearOp left_mult(const LinearOp& a, double* residual = nullptr) const;
  LinearOp right_mult(const LinearOp& a, double* residual = nullptr) const;

  /// (da)^* = -d(a^*) residual over the algebra basis.
  double star_convention_residual(const N1Data& data) const;

 private:
  std::vector<LinearOp> basis_;
  Eigen::Index hilbert_dim_ = 0;
  LinearOp dirac_;
};

/// Right actions induced by a real structure: xi.b = J b^* J^* xi for algebra
/// elements and xi.w = J w^* J^* xi for one-forms. Requires the first-order
/// condition; construction rejects real structures that violate it.
struct BimoduleActions {
  std::vector<LinearOp> right_algebra;   // indexed by algebra basis
  std::vector<LinearOp> right_forms;     // indexed by one-form basis
  double left_right_commute_residual = 0.0;
};
BimoduleActions bimodule_actions(const N1Data& data, const RealStructure& rs,
                                 const OneForms& forms, const Tolerance& tol);

/// Decomposition of the one-forms of a Kasparov product:
///   Omega^1_D(A1 ox A2) = Omega^1_{D1}(A1) ox A2  (+)  gamma1 . (A1 ox Omega^1_{D2}(A2))
/// where the grading twist is how the abstract second summand sits among
/// concrete operators on H1 ox H2.
struct ProductOneForms {
  OneForms product;            // computed directly from the product data
  Subspace summand_one;        // span{ w1 ox a2 }
  Subspace summand_two;        // span{ gamma1 a1 ox w2 }
  double overlap = 0.0;        // largest principal angle cosine residual proxy
  double equality_residual = 0.0;  // Omega_prod vs summand sum, both inclusions
  double differential_residual = 0.0;  // Lemma on d(a1 ox a2) components
  double leibniz_residual = 0.0;       // [D, a1 ox a2] = d1a1 ox a2 + gamma1 a1 ox d2a2
};
ProductOneForms product_one_forms(const N1Data& d1, const N1Data& d2,
                                  const N1Data& product, const Tolerance& tol);

}  // namespace susyspec

#endif

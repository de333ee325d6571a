#ifndef SUSYSPEC_MODULES_HPP
#define SUSYSPEC_MODULES_HPP

#include "susyspec/forms.hpp"

namespace susyspec {

/// Hermitian finitely generated projective left module E = p A^n presented by
/// module generators v_1..v_n in H and a projection p in M_n(A). Elements are
/// coordinate rows (xi_1..xi_n) over A with xi = xi.p, embedded in H by
/// xi -> sum_j pi(xi_j) v_j. The canonical A-valued structures are
///   <xi,eta>_A   = sum_j xi_j eta_j^*          (linear in the first slot)
///   <xi,eta>_A^J = <J xi, J eta>_A             (antilinear in the first slot)
/// The J-twisted form is the one the balanced inner product on E ox_A E
/// factors through; it turns the J-induced right action into algebra
/// multiplication, which the untwisted form cannot do.
class HermitianModule {
 public:
  HermitianModule() = default;

  /// Free presentation (p = identity). Generators must be an A-module basis.
  static HermitianModule free(const N1Data& data, std::vector<Vector> generators,
                              const Tolerance& tol);
  /// General presentation with p = (p_ij) given as realized algebra elements.
  static HermitianModule projective(const N1Data& data, std::vector<Vector> generators,
                                    std::vector<std::vector<LinearOp>> p,
                                    const Tolerance& tol);

  const StarAlgebra& algebra() const { return algebra_; }
  Eigen::Index n_generators() const { return static_cast<Eigen::Index>(generators_.size()); }
  Eigen::Index hilbert_dim() const { return hilbert_dim_; }
  /// Complex dimension of E (equals hilbert_dim when E = H).
  Eigen::Index dim() const { return static_cast<Eigen::Index>(embed_.cols()); }
  bool is_free() const { return free_; }
  const Vector& generator(Eigen::Index j) const { return generators_[static_cast<size_t>(j)]; }
  /// Embedded image of the j-th presentation row eps_j p.
  const Vector& row_embedding(Eigen::Index j) const { return rows_[static_cast<size_t>(j)]; }
  /// Realized p entry (identity pattern for free presentations).
  LinearOp p_entry(Eigen::Index i, Eigen::Index j) const;

  /// Orthonormal basis of E inside H.
  const LinearOp& embedding() const { return embed_; }
  bool spans_hilbert_space(const Tolerance& tol) const;

  /// Coordinates (n x hilbert_dim stacked) of an embedded element: the j-th
  /// block holds the realized algebra element xi_j.
  std::vector<LinearOp> coordinates(const Vector& xi) const;

  LinearOp inner_product_A(const Vector& xi, const Vector& eta) const;
  LinearOp inner_product_A_twisted(const Vector& xi, const Vector& eta,
                                   const RealStructure& rs) const;

  double projection_residual() const;  // p = p^2 = p^*
  /// Positivity of <xi,xi>_A on a sample of basis vectors.
  double positivity_residual() const;
  /// a<xi,eta>_A = <a xi, eta>_A over algebra and module bases.
  double left_linearity_residual() const;
  /// J(E) = E and gamma(E) = E residuals.
  double stability_residual(const RealStructure& rs, const LinearOp& grading) const;

 private:
  StarAlgebra algebra_;
  Eigen::Index hilbert_dim_ = 0;
  std::vector<Vector> generators_;
  std::vector<std::vector<LinearOp>> p_;   // realized entries, n x n
  std::vector<Vector> rows_;               // embedded eps_j p
  LinearOp iota_;                          // coordinate space -> H (injective)
  LinearOp iota_pinv_;
  LinearOp embed_;                         // orthonormal basis of E in H
  bool free_ = true;
  Tolerance tol_;

  void finish(const Tolerance& tol);
};

/// A finite-dimensional space together with the left/right actions of the
/// algebra basis, the raw material of every balanced tensor product.
struct ActionSpace {
  Eigen::Index dim = 0;
  std::vector<LinearOp> left;
  std::vector<LinearOp> right;
};

ActionSpace module_action_space(const HermitianModule& e, const RealStructure& rs);
ActionSpace forms_action_space(const OneForms& forms, const N1Data& data);

/// Model of a balanced tensor product: the plain tensor space modulo the span
/// of x.a ox y - x ox a.y, with a section and coordinate map. When a Gram
/// matrix is supplied the quotient basis is orthonormal for it (null
/// directions beyond the relation space are removed and counted).
class QuotientSpace {
 public:
  QuotientSpace() = default;

  Eigen::Index ambient_dim() const { return ambient_; }
  Eigen::Index dim() const { return section_.cols(); }
  Eigen::Index relation_dim() const { return relation_dim_; }
  Eigen::Index extra_kernel() const { return extra_kernel_; }
  bool has_gram() const { return has_gram_; }

  const LinearOp& section() const { return section_; }       // ambient x q
  const LinearOp& coord_map() const { return coord_map_; }   // q x ambient
  const LinearOp& gram() const { return gram_; }
  /// Orthonormal basis of the relation complement (equals section unless the
  /// basis was re-scaled against a Gram matrix).
  const LinearOp& std_section() const { return std_section_; }

  Vector coords(const Vector& ambient) const { return coord_map_ * ambient; }
  Vector lift(const Vector& q) const { return section_ * q; }

  /// Push an ambient-level map through the quotients: coords_target o M o section.
  LinearOp descend(const LinearOp& ambient_map, const QuotientSpace& target) const;
  /// Norm of target-coords o M restricted to the relation space: zero iff M
  /// is well-defined on the quotient.
  double well_definedness(const LinearOp& ambient_map, const QuotientSpace& target) const;
  /// Same for a map given as target-coords x ambient.
  double well_definedness_of_coords(const LinearOp& coords_level_map) const;

  static QuotientSpace plain(Eigen::Index ambient, const std::vector<LinearOp>& relation_ops,
                             const Tolerance& tol);
  static QuotientSpace with_gram(Eigen::Index ambient, const std::vector<LinearOp>& relation_ops,
                                 const LinearOp& gram, const Tolerance& tol);
  /// Iterated quotient (X ox_A Y) ox_A Z presented against the full ambient
  /// dim(X ox Y) * dim(Z): stage one quotients the left pair, stage two the
  /// result against Z.
  static QuotientSpace staged(const QuotientSpace& left_pair, Eigen::Index right_dim,
                              const QuotientSpace& stage_two);

 private:
  Eigen::Index ambient_ = 0;
  Eigen::Index relation_dim_ = 0;
  Eigen::Index extra_kernel_ = 0;
  bool has_gram_ = false;
  LinearOp section_, coord_map_, gram_, std_section_;
};

/// X ox_A Y for two action spaces; also returns the induced actions so that
/// iterated products (x ox_A y) ox_A z stay two-factor constructions.
struct BalancedPair {
  QuotientSpace space;
  ActionSpace induced;  // left action from X, right action from Y
};
BalancedPair balanced_tensor(const ActionSpace& x, const ActionSpace& y,
                             const Tolerance& tol);

/// The inner-product space E ox_A E: balanced quotient with the Gram matrix
///   << xi ox eta, xi' ox eta' >> = < eta, <xi,xi'>_A^J eta' >_H
/// on representatives. descent_residual records the Gram norm of the relation
/// space, which vanishes exactly when the inner product descends.
struct BalancedEE {
  QuotientSpace space;
  LinearOp gram;              // ambient Gram matrix
  double descent_residual = 0.0;
  double psd_residual = 0.0;  // most negative eigenvalue clipped at 0
};
BalancedEE balanced_e_tensor_e(const HermitianModule& e, const RealStructure& rs,
                               const Tolerance& tol);

/// p1 ox p2 presentation of E1 ox E2 over A1 ox A2 with the factorized
/// Hermitian structure.
struct ProductHermitian {
  HermitianModule module;
  double factorization_residual = 0.0;  // <x1 ox y1, x2 ox y2> = <x1,x2> ox <y1,y2>
};
ProductHermitian canonical_product_hermitian(const N1Data& product,
                                             const HermitianModule& e1,
                                             const HermitianModule& e2,
                                             const Tolerance& tol);

}  // namespace susyspec

#endif

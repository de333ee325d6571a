#ifndef SUSYSPEC_LINALG_HPP
#define SUSYSPEC_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace susyspec {

using Complex = std::complex<double>;
using LinearOp = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Equality and rank thresholds used throughout. eq_tol bounds operator-norm
/// residuals, rank_tol is the singular-value cutoff for span/kernel decisions.
struct Tolerance {
  double eq_tol = 1e-10;
  double rank_tol = 1e-9;

  Tolerance() = default;
  Tolerance(double eq, double rank) : eq_tol(eq), rank_tol(rank) {
    if (!(0.0 < eq_tol && eq_tol <= rank_tol && rank_tol < 1.0))
      throw std::invalid_argument("Tolerance requires 0 < eq_tol <= rank_tol < 1");
  }
};

/// Hilbert space inner product, antilinear in the first argument.
inline Complex inner(const Vector& v, const Vector& w) { return v.dot(w); }

/// Hilbert-Schmidt inner product of operators, antilinear in the first argument.
inline Complex hs_inner(const LinearOp& x, const LinearOp& y) {
  return (x.adjoint() * y).trace();
}

LinearOp adjoint(const LinearOp& x);
LinearOp commutator(const LinearOp& x, const LinearOp& y);
LinearOp anticommutator(const LinearOp& x, const LinearOp& y);

/// Largest singular value. Zero-sized operators have norm 0.
double operator_norm(const LinearOp& x);

/// Column-major flattening of an operator to a vector and back.
Vector vectorize(const LinearOp& x);
LinearOp unvectorize(const Vector& v, Eigen::Index rows, Eigen::Index cols);

LinearOp kronecker(const LinearOp& a, const LinearOp& b);

/// Kronecker product of column vectors: (x ox y)(i*dim_y + j) = x_i y_j.
Vector kron_vec(const Vector& x, const Vector& y);

/// An antilinear operator v -> coeff * conj(v). Composition with linear and
/// antilinear operators follows the explicit rules below so that expressions
/// like J^2, J D J^* and J a^* J^* never pick up silent conjugation mistakes.
class AntilinearOp {
 public:
  AntilinearOp() = default;
  explicit AntilinearOp(LinearOp coeff) : coeff_(std::move(coeff)) {}

  const LinearOp& coeff() const { return coeff_; }
  Eigen::Index rows() const { return coeff_.rows(); }
  Eigen::Index cols() const { return coeff_.cols(); }

  Vector apply(const Vector& v) const { return coeff_ * v.conjugate(); }

  /// Adjoint w.r.t. <Av,w> = conj(<v, A^* w>): the matrix transposes.
  AntilinearOp adjoint() const { return AntilinearOp(coeff_.transpose()); }

  /// A o B for antilinear A, B is linear with matrix M_A conj(M_B).
  friend LinearOp compose(const AntilinearOp& a, const AntilinearOp& b) {
    return a.coeff_ * b.coeff_.conjugate();
  }
  /// A o X, antilinear A, linear X.
  friend AntilinearOp compose(const AntilinearOp& a, const LinearOp& x) {
    return AntilinearOp(a.coeff_ * x.conjugate());
  }
  /// X o A, linear X, antilinear A.
  friend AntilinearOp compose(const LinearOp& x, const AntilinearOp& a) {
    return AntilinearOp(x * a.coeff_);
  }

  /// J X J^* as a linear operator: M conj(X) M^dag.
  LinearOp sandwich(const LinearOp& x) const {
    return coeff_ * x.conjugate() * coeff_.adjoint();
  }

  /// Kronecker product of antilinear operators (single conjugation).
  friend AntilinearOp kronecker(const AntilinearOp& a, const AntilinearOp& b) {
    return AntilinearOp(kronecker(a.coeff_, b.coeff_));
  }

  bool is_antiunitary(const Tolerance& tol) const {
    LinearOp id = LinearOp::Identity(coeff_.rows(), coeff_.cols());
    return operator_norm(LinearOp(coeff_ * coeff_.adjoint() - id)) <= tol.eq_tol;
  }

 private:
  LinearOp coeff_;
};

/// A subspace of C^n held as an orthonormal column basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(LinearOp basis, Eigen::Index ambient, double rank_tol)
      : basis_(std::move(basis)), ambient_(ambient), rank_tol_(rank_tol) {}

  Eigen::Index dim() const { return basis_.cols(); }
  Eigen::Index ambient_dim() const { return ambient_; }
  const LinearOp& basis() const { return basis_; }
  double rank_tol() const { return rank_tol_; }

  Vector project(const Vector& v) const { return basis_ * (basis_.adjoint() * v); }
  /// Distance from v to the subspace.
  double residual(const Vector& v) const { return (v - project(v)).norm(); }
  bool contains(const Vector& v, double tol) const { return residual(v) <= tol; }
  /// Residual of S as a subset of this subspace.
  double contains_residual(const Subspace& s) const {
    if (s.dim() == 0) return 0.0;
    LinearOp d = s.basis() - basis_ * (basis_.adjoint() * s.basis());
    return operator_norm(d);
  }

 private:
  LinearOp basis_;
  Eigen::Index ambient_ = 0;
  double rank_tol_ = 0.0;
};

/// Orthonormal basis of the span of the given columns, rank decided by
/// singular values relative to rank_tol. Deterministic for fixed input.
Subspace span_closure(const LinearOp& columns, const Tolerance& tol);
Subspace span_closure(const std::vector<Vector>& vectors, Eigen::Index ambient,
                      const Tolerance& tol);

/// Quotient of C^n by a relation subspace: the orthogonal projector P onto the
/// complement together with an orthonormal section of the quotient.
struct QuotientByResult {
  LinearOp projector;   // P = P^2 = P^*, rank = ambient - dim(relations)
  LinearOp section;     // ambient x rank, orthonormal columns spanning range(P)
  Eigen::Index rank = 0;
};
QuotientByResult quotient_by(Eigen::Index ambient_dim, const Subspace& relations);

struct OpEquality {
  bool equal = false;
  double residual = 0.0;
};
OpEquality op_equal(const LinearOp& x, const LinearOp& y, const Tolerance& tol);

/// Orthonormal basis of the common kernel of {m^dag : m in ops}, i.e. of the
/// orthogonal complement of the sum of ranges. Deterministic.
LinearOp common_range_complement(const std::vector<LinearOp>& ops,
                                 Eigen::Index ambient, const Tolerance& tol);

}  // namespace susyspec

#endif

#include "susyspec/forms.hpp"

namespace susyspec {

OneForms::OneForms(const N1Data& data, const Tolerance& tol) {
  hilbert_dim_ = data.hilbert_dim();
  dirac_ = data.dirac;
  std::vector<Vector> cols;
  for (const auto& a : data.algebra.basis())
    for (const auto& b : data.algebra.basis())
      cols.push_back(vectorize(LinearOp(a * commutator(data.dirac, b))));
  Subspace s = span_closure(cols, hilbert_dim_ * hilbert_dim_, tol);
  for (Eigen::Index k = 0; k < s.dim(); ++k)
    basis_.push_back(unvectorize(s.basis().col(k), hilbert_dim_, hilbert_dim_));
}

OneForms::Coords OneForms::coords(const LinearOp& omega) const {
  Coords c;
  c.coeffs = Vector(dim());
  for (Eigen::Index k = 0; k < dim(); ++k)
    c.coeffs(k) = hs_inner(basis_[static_cast<size_t>(k)], omega);
  c.residual = operator_norm(LinearOp(omega - realize(c.coeffs)));
  return c;
}

LinearOp OneForms::realize(const Vector& coeffs) const {
  LinearOp out = LinearOp::Zero(hilbert_dim_, hilbert_dim_);
  for (Eigen::Index k = 0; k < dim(); ++k)
    out += coeffs(k) * basis_[static_cast<size_t>(k)];
  return out;
}

OneForms::Coords OneForms::dirac_d(const LinearOp& a) const {
  return coords(commutator(dirac_, a));
}

LinearOp OneForms::left_mult(const LinearOp& a, double* residual) const {
  LinearOp m(dim(), dim());
  double worst = 0.0;
  for (Eigen::Index k = 0; k < dim(); ++k) {
    Coords c = coords(LinearOp(a * basis_[static_cast<size_t>(k)]));
    m.col(k) = c.coeffs;
    worst = std::max(worst, c.residual);
  }
  if (residual) *residual = worst;
  return m;
}

LinearOp OneForms::right_mult(const LinearOp& a, double* residual) const {
  LinearOp m(dim(), dim());
  double worst = 0.0;
  for (Eigen::Index k = 0; k < dim(); ++k) {
    Coords c = coords(LinearOp(basis_[static_cast<size_t>(k)] * a));
    m.col(k) = c.coeffs;
    worst = std::max(worst, c.residual);
  }
  if (residual) *residual = worst;
  return m;
}

double OneForms::star_convention_residual(const N1Data& data) const {
  double worst = 0.0;
  for (const auto& a : data.algebra.basis()) {
    LinearOp da = commutator(data.dirac, a);
    LinearOp dastar = commutator(data.dirac, LinearOp(a.adjoint()));
    worst = std::max(worst, operator_norm(LinearOp(da.adjoint() + dastar)));
  }
  return worst;
}

BimoduleActions bimodule_actions(const N1Data& data, const RealStructure& rs,
                                 const OneForms& forms, const Tolerance& tol) {
  CheckReport rsrep = verify_real_structure(data, rs, tol);
  const CheckEntry* first = rsrep.find("RS-order1");
  if (first && !first->pass)
    throw std::invalid_argument(
        "bimodule_actions: first-order condition violated, right actions would be "
        "ill-defined");

  BimoduleActions acts;
  for (const auto& a : data.algebra.basis())
    acts.right_algebra.push_back(rs.right_action(a));
  for (const auto& w : forms.basis())
    acts.right_forms.push_back(rs.right_action(w));

  double worst = 0.0;
  for (const auto& a : data.algebra.basis())
    for (const auto& r : acts.right_algebra)
      worst = std::max(worst, operator_norm(commutator(a, r)));
  acts.left_right_commute_residual = worst;
  return acts;
}

ProductOneForms product_one_forms(const N1Data& d1, const N1Data& d2,
                                  const N1Data& product, const Tolerance& tol) {
  ProductOneForms out;
  out.product = OneForms(product, tol);
  const Eigen::Index n1 = d1.hilbert_dim(), n2 = d2.hilbert_dim();
  const Eigen::Index n = product.hilbert_dim();
  OneForms f1(d1, tol), f2(d2, tol);

  std::vector<Vector> s1cols, s2cols;
  for (const auto& w : f1.basis())
    for (const auto& b : d2.algebra.basis())
      s1cols.push_back(vectorize(kronecker(w, b)));
  for (const auto& a : d1.algebra.basis())
    for (const auto& w : f2.basis())
      s2cols.push_back(vectorize(kronecker(LinearOp(d1.grading * a), w)));
  out.summand_one = span_closure(s1cols, n * n, tol);
  out.summand_two = span_closure(s2cols, n * n, tol);

  // overlap: largest singular value of B1^dag B2 (cosine of smallest angle)
  if (out.summand_one.dim() > 0 && out.summand_two.dim() > 0)
    out.overlap = operator_norm(
        LinearOp(out.summand_one.basis().adjoint() * out.summand_two.basis()));

  // equality of Omega_prod with the (internal) sum, both inclusions
  std::vector<Vector> sumcols;
  for (Eigen::Index k = 0; k < out.summand_one.dim(); ++k)
    sumcols.push_back(out.summand_one.basis().col(k));
  for (Eigen::Index k = 0; k < out.summand_two.dim(); ++k)
    sumcols.push_back(out.summand_two.basis().col(k));
  Subspace sum = span_closure(sumcols, n * n, tol);
  double r = 0.0;
  for (const auto& w : out.product.basis())
    r = std::max(r, sum.residual(vectorize(w)));
  for (const auto& c : sumcols) {
    OneForms::Coords cc = out.product.coords(unvectorize(c, n, n));
    r = std::max(r, cc.residual);
  }
  out.equality_residual = r;

  // Leibniz with the grading twist and the component form of the product
  // differential d(a1 ox a2) = (d1 a1 ox a2, a1 ox d2 a2)
  double leib = 0.0, diff = 0.0;
  for (const auto& a1 : d1.algebra.basis()) {
    for (const auto& a2 : d2.algebra.basis()) {
      const LinearOp x = kronecker(a1, a2);
      const LinearOp dx = commutator(product.dirac, x);
      const LinearOp part1 = kronecker(commutator(d1.dirac, a1), a2);
      const LinearOp part2 =
          kronecker(LinearOp(d1.grading * a1), commutator(d2.dirac, a2));
      leib = std::max(leib, operator_norm(LinearOp(dx - part1 - part2)));
      // abstract components recovered by stripping the grading twist
      const LinearOp abstract2 =
          kronecker(LinearOp(d1.grading), LinearOp::Identity(n2, n2)) * part2;
      diff = std::max(diff, operator_norm(LinearOp(
                                abstract2 - kronecker(a1, commutator(d2.dirac, a2)))));
      diff = std::max(diff, out.summand_one.residual(vectorize(part1)));
      diff = std::max(diff, out.summand_two.residual(vectorize(part2)));
    }
  }
  out.leibniz_residual = leib;
  out.differential_residual = diff;
  return out;
}

}  // namespace susyspec

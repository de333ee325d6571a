#include "susyspec/n11_product.hpp"

#include <Eigen/Eigenvalues>

namespace susyspec {

std::string_view variant_name(ProductVariant v) {
  switch (v) {
    case ProductVariant::kMain: return "main";
    case ProductVariant::kV1: return "v1";
    case ProductVariant::kV2: return "v2";
    case ProductVariant::kV3: return "v3";
    case ProductVariant::kV4: return "v4";
    case ProductVariant::kV5: return "v5";
  }
  return "?";
}

ProductVariant variant_from_name(std::string_view name) {
  for (ProductVariant v : kAllVariants)
    if (variant_name(v) == name) return v;
  throw std::invalid_argument("unknown product variant: " + std::string(name));
}

N11Data n11_product(const N11Data& x, const N11Data& y, ProductVariant v,
                    const Tolerance& tol) {
  const Eigen::Index n1 = x.space_dim(), n2 = y.space_dim();
  const LinearOp i1 = LinearOp::Identity(n1, n1);
  const LinearOp i2 = LinearOp::Identity(n2, n2);

  N11Data out;
  out.algebra = StarAlgebra::tensor(x.algebra, y.algebra, tol);
  out.grading = kronecker(x.grading, y.grading);
  out.hodge = kronecker(x.hodge, y.hodge);
  switch (v) {
    case ProductVariant::kMain:
      out.d_frak = kronecker(x.d_frak, i2) + kronecker(x.hodge, y.d_frak);
      out.d_bar = kronecker(x.d_bar, y.hodge) + kronecker(x.grading, y.d_bar);
      break;
    case ProductVariant::kV1:
      out.d_frak = kronecker(x.d_frak, i2) + kronecker(x.hodge, y.d_frak);
      out.d_bar = kronecker(x.d_bar, y.grading) + kronecker(x.hodge, y.d_bar);
      break;
    case ProductVariant::kV2:
      out.d_frak = kronecker(x.d_frak, y.hodge) + kronecker(i1, y.d_frak);
      out.d_bar = kronecker(x.d_bar, y.grading) + kronecker(x.hodge, y.d_bar);
      break;
    case ProductVariant::kV3:
      out.d_frak = kronecker(x.d_frak, y.hodge) + kronecker(i1, y.d_frak);
      out.d_bar = kronecker(x.d_bar, y.hodge) + kronecker(x.grading, y.d_bar);
      break;
    case ProductVariant::kV4:
      out.d_frak = kronecker(x.d_frak, i2) + kronecker(x.grading, y.d_frak);
      out.d_bar = kronecker(x.d_bar, i2) + kronecker(x.grading, y.d_bar);
      break;
    case ProductVariant::kV5:
      out.d_frak = kronecker(x.d_frak, y.grading) + kronecker(i1, y.d_frak);
      out.d_bar = kronecker(x.d_bar, y.grading) + kronecker(i1, y.d_bar);
      break;
  }
  return out;
}

AssociatedEquivalence associated_n1_equivalence(const N11Data& x, const N11Data& y,
                                                const Tolerance& tol) {
  AssociatedEquivalence out;
  out.u = equivalence_unitary(x.hodge, y.grading, tol);
  out.v = equivalence_unitary(x.grading, y.grading, tol);

  const Eigen::Index n1 = x.space_dim(), n2 = y.space_dim();
  const LinearOp i1 = LinearOp::Identity(n1, n1);
  const LinearOp i2 = LinearOp::Identity(n2, n2);
  const LinearOp id = kronecker(i1, i2);

  CheckReport& r = out.report;
  r.measured("Lemma2.12", "u-unitary", operator_norm(LinearOp(out.u * out.u.adjoint() - id)),
             tol.eq_tol);
  r.measured("Lemma2.12", "v-unitary", operator_norm(LinearOp(out.v * out.v.adjoint() - id)),
             tol.eq_tol);
  r.measured("Lemma2.12", "u-involution", operator_norm(LinearOp(out.u * out.u - id)),
             tol.eq_tol);
  r.measured("Lemma2.12", "v-involution", operator_norm(LinearOp(out.v * out.v - id)),
             tol.eq_tol);

  const LinearOp product_dirac =
      kronecker(x.d_frak, i2) + kronecker(x.hodge, y.d_frak);
  const LinearOp kasparov_dirac =
      kronecker(x.d_frak, i2) + kronecker(x.grading, y.d_frak);
  const LinearOp vu = out.v * out.u;
  r.measured("Lemma2.12", "vu-conjugation",
             operator_norm(LinearOp(vu * product_dirac * vu.adjoint() - kasparov_dirac)),
             tol.eq_tol);
  return out;
}

RealMatrix variant_distinguisher(const N11Data& x, const N11Data& y,
                                 const Tolerance& tol) {
  std::array<N11Data, 6> prods;
  for (size_t k = 0; k < kAllVariants.size(); ++k)
    prods[k] = n11_product(x, y, kAllVariants[k], tol);
  RealMatrix dist = RealMatrix::Zero(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      dist(a, b) = std::max(
          operator_norm(LinearOp(prods[static_cast<size_t>(a)].d_frak -
                                 prods[static_cast<size_t>(b)].d_frak)),
          operator_norm(LinearOp(prods[static_cast<size_t>(a)].d_bar -
                                 prods[static_cast<size_t>(b)].d_bar)));
  return dist;
}

namespace {

double heat_trace(const LinearOp& dirac, double eps) {
  Eigen::SelfAdjointEigenSolver<LinearOp> es(dirac * dirac);
  double tr = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    tr += std::exp(-eps * es.eigenvalues()(k));
  return tr;
}

}  // namespace

double heat_trace_factorization_residual(const N11Data& x, const N11Data& y,
                                         double eps, const Tolerance& tol) {
  N11Data prod = n11_product(x, y, ProductVariant::kMain, tol);
  const double lhs = heat_trace(prod.d_frak, eps);
  const double rhs = heat_trace(x.d_frak, eps) * heat_trace(y.d_frak, eps);
  return std::abs(lhs - rhs);
}

}  // namespace susyspec

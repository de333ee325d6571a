#ifndef SUSYSPEC_MULTIPLICATIVITY_HPP
#define SUSYSPEC_MULTIPLICATIVITY_HPP

#include "susyspec/forms.hpp"
#include "susyspec/n11_product.hpp"

namespace susyspec {

/// One spectral datum pushed end to end through the extension procedure.
struct ExtensionPipeline {
  SpectralSetup setup;
  Connection connection;
  PhiResult phi;
};

/// Kasparov product of two pipelines: product data, product real structure,
/// product module and the product connection, extended again.
struct ProductPipeline {
  ExtensionPipeline pipeline;
  ProductOneForms one_forms;
  ProductHermitian hermitian;
};
ProductPipeline make_product_pipeline(const ExtensionPipeline& p1,
                                      const ExtensionPipeline& p2,
                                      HodgeChoice hodge = HodgeChoice::kOneTensorGamma);

/// Unitary identification of the balanced model of the product with the
/// tensor product of the factor models, built from the middle flip.
struct CanonicalIso {
  LinearOp matrix;  // (q1*q2) x q_prod
  double unitarity = 0.0;
  double algebra_intertwine = 0.0;
  double grading_intertwine = 0.0;
  double hodge_intertwine = 0.0;
};
CanonicalIso canonical_iso(const ExtensionPipeline& p1, const ExtensionPipeline& p2,
                           const ProductPipeline& pp);

struct VariantVerdict {
  ProductVariant variant;
  double residual_d = 0.0;
  double residual_dbar = 0.0;
  bool equal = false;
};

struct MultiplicativityResult {
  CanonicalIso iso;
  std::vector<VariantVerdict> verdicts;
  double spectrum_preservation = 0.0;  // eigenvalue transport check
  bool degenerate = false;             // all six products coincide
  CheckReport report;
};
MultiplicativityResult check_multiplicativity(const ExtensionPipeline& p1,
                                              const ExtensionPipeline& p2,
                                              const ProductPipeline& pp,
                                              const std::vector<ProductVariant>& variants,
                                              const Tolerance& tol);

/// Per-stage residuals of the product pipeline against its closed forms:
/// the one-form decomposition, the product differential, the decompositions
/// of the flip, the right and tensored connections, both contractions, and
/// the final operator formulas.
struct LemmaChainTrace {
  double omega_decomposition_direct = 0.0;
  double omega_decomposition_equality = 0.0;
  double product_differential = 0.0;
  double psi_first = 0.0, psi_second = 0.0;
  double nabla_bar_decomposition = 0.0;
  double nabla_tilde_decomposition = 0.0;
  double c_first = 0.0, c_second = 0.0;
  double cbar_first = 0.0, cbar_second = 0.0;
  double dirac_formula = 0.0, dirac_bar_formula = 0.0;
  double transported_squares = 0.0, transported_anticommute = 0.0;
  CheckReport report;
};
LemmaChainTrace product_pipeline_trace(const ExtensionPipeline& p1,
                                       const ExtensionPipeline& p2,
                                       const ProductPipeline& pp,
                                       const Tolerance& tol);

}  // namespace susyspec

#endif

#ifndef SUSYSPEC_CONNECTION_HPP
#define SUSYSPEC_CONNECTION_HPP

#include <cstdint>

#include "susyspec/modules.hpp"

namespace susyspec {

/// One spectral datum with real structure and module, plus every derived
/// space the extension procedure runs through. Owns its members; all maps
/// between the spaces below are matrices in the recorded coordinates.
struct SpectralSetup {
  N1Data data;
  RealStructure rs;
  HermitianModule module;
  Tolerance tol;

  OneForms forms;
  BimoduleActions actions;
  ActionSpace e_space;      // E in its embedded orthonormal basis
  ActionSpace omega_space;  // one-forms in their operator basis
  BalancedPair oe;          // Omega ox_A E
  BalancedPair eo;          // E ox_A Omega
  BalancedEE ee;            // E ox_A E with the balanced inner product
  QuotientSpace eoe;        // E ox_A Omega ox_A E (staged through EO ox_A E)

  Eigen::Index e_dim() const { return e_space.dim; }
  Eigen::Index omega_dim() const { return omega_space.dim; }

  /// gamma and J^* restricted to E coordinates.
  LinearOp grading_on_e() const;
  LinearOp j_star_on_e_coeff() const;  // antilinear coefficient matrix

  /// Left action of a realized algebra element on the E ox_A E model.
  LinearOp algebra_on_ee(const LinearOp& a) const;
};

SpectralSetup make_setup(N1Data data, RealStructure rs, HermitianModule module,
                         const Tolerance& tol);

/// Compatible connection nabla : E -> Omega^1 ox_A E, stored as Grassmann part
/// plus an explicit perturbation so the affine space of connections stays
/// visible and samplable.
struct Connection {
  LinearOp grassmann_part;  // e_dim -> oe coords
  LinearOp perturbation;
  LinearOp total() const { return grassmann_part + perturbation; }
};

/// nabla(xi) = (d xi_j) . p componentwise through the presentation.
Connection grassmann(const SpectralSetup& s);

Connection perturbed(const Connection& base, const LinearOp& alpha);

/// Leibniz, metric compatibility and grading commutation residuals.
CheckReport verify_connection(const SpectralSetup& s, const Connection& c);

/// Random A-linear module map E -> Omega^1 ox_A E, optionally commuting with
/// the grading; the associated vector space of the affine space C(E).
LinearOp random_module_map(const SpectralSetup& s, std::uint64_t seed, double scale,
                           bool gamma_even);

/// Basis of all A-linear (optionally gamma-even) module maps E -> Omega ox E,
/// as columns of vectorized maps.
LinearOp module_map_basis(const SpectralSetup& s, bool gamma_even);

/// Antilinear flip w ox xi -> J xi ox w^* between the quotient models.
struct PsiMap {
  LinearOp coeff;  // eo-coords <- conj(oe-coords)
  double well_definedness = 0.0;
  Vector apply(const Vector& oe_coords) const { return coeff * oe_coords.conjugate(); }
};
PsiMap flip_psi(const SpectralSetup& s);

/// Right connection xi -> -Psi(nabla J^* xi), a linear map E -> E ox_A Omega.
LinearOp right_connection(const SpectralSetup& s, const Connection& c,
                          const PsiMap& psi);

/// Tensored connection xi1 ox xi2 -> nabla_bar xi1 ox xi2 + xi1 ox nabla xi2.
struct TensoredConnection {
  LinearOp matrix;  // ee-coords -> eoe-coords
  LinearOp ambient; // eoe-coords <- plain E ox E index (i*m+j)
  double well_definedness = 0.0;
};
TensoredConnection tensored_connection(const SpectralSetup& s, const Connection& c,
                                       const LinearOp& nabla_bar);

/// nabla(e1 ox e2) = nabla_1 e1 ox e2 + e1 ox nabla_2 e2 on the product module,
/// expressed against the product setup's one-form and module coordinates.
Connection product_connection(const SpectralSetup& s1, const Connection& c1,
                              const SpectralSetup& s2, const Connection& c2,
                              const SpectralSetup& sp);

}  // namespace susyspec

#endif

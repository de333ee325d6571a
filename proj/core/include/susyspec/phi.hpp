#ifndef SUSYSPEC_PHI_HPP
#define SUSYSPEC_PHI_HPP

#include "susyspec/connection.hpp"

namespace susyspec {

/// N=(1,1) spectral data in the operator-pair form, with the differential
/// recovered as d = (Dfrak - i Dbar)/2.
struct N11Data {
  StarAlgebra algebra;   // acting on the same space as the operators
  LinearOp d_frak;
  LinearOp d_bar;
  LinearOp grading;
  LinearOp hodge;

  Eigen::Index space_dim() const { return d_frak.rows(); }
  LinearOp d() const { return 0.5 * (d_frak - Complex(0, 1) * d_bar); }
  LinearOp d_star() const { return 0.5 * (d_frak + Complex(0, 1) * d_bar); }
  LinearOp laplacian() const { return d() * d_star() + d_star() * d(); }

  /// From the quintuple form (d, gamma, hodge).
  static N11Data from_differential(StarAlgebra algebra, const LinearOp& d,
                                   LinearOp grading, LinearOp hodge);
};

/// Full axiom check: differential form, operator-pair form, the equivalences
/// between them, the Hodge/grading normalization, and the degenerate-Hodge
/// rejection (hodge equal to the grading forces d = 0).
CheckReport verify_n11(const N11Data& data, const Tolerance& tol);

/// Associated even spectral data (A, H, Dfrak, grading).
N1Data to_n1(const N11Data& data, const Tolerance& tol);

/// The two contractions E ox Omega ox E -> E ox E:
///   c:    xi1 ox w ox xi2 -> xi1 ox (w xi2)
///   cbar: xi1 ox w ox xi2 -> (xi1 . w) ox (gamma xi2)
struct Contractions {
  LinearOp c;      // ee-coords <- eoe-coords
  LinearOp cbar;
  double wd_c = 0.0;
  double wd_cbar = 0.0;
};
Contractions contractions(const SpectralSetup& s);

enum class HodgeChoice {
  kOneTensorGamma,  // the corrected choice 1 ox gamma
  kGammaTensorOne,  // the historical slip gamma ox 1, kept to demonstrate it
};

/// The extension procedure output. A candidate that fails some axiom is a
/// valid outcome; the report records exactly what holds for this connection.
struct PhiResult {
  N11Data candidate;
  CheckReport report;          // pipeline stages + full axiom check
  PsiMap psi;
  LinearOp nabla_bar;
  TensoredConnection nabla_tilde;
  Contractions contr;
};
PhiResult phi(const SpectralSetup& s, const Connection& c,
              HodgeChoice hodge = HodgeChoice::kOneTensorGamma);

}  // namespace susyspec

#endif

#ifndef SUSYSPEC_N1_HPP
#define SUSYSPEC_N1_HPP

#include <optional>
#include <set>

#include "susyspec/report.hpp"
#include "susyspec/star_algebra.hpp"

namespace susyspec {

/// Even spectral data (A, H, D, gamma) on a finite Hilbert space.
struct N1Data {
  StarAlgebra algebra;
  LinearOp dirac;
  LinearOp grading;

  Eigen::Index hilbert_dim() const { return algebra.hilbert_dim(); }
};

/// Axiom verification. Bounded-commutator and heat-trace summability entries
/// are reported as trivially satisfied rather than omitted.
CheckReport verify_n1(const N1Data& data, const Tolerance& tol);

/// Sign of an (anti)commutation relation measured numerically. Indeterminate
/// when both signs fit, which happens exactly for vanishing operators.
struct MeasuredSign {
  int value = 0;           // +1, -1, or 0 when indeterminate
  double residual = 0.0;   // best-sign residual
  bool matches(int s) const { return value == 0 || value == s; }
};

struct RealStructure {
  AntilinearOp j;
  MeasuredSign eps;        // J^2 = eps
  MeasuredSign eps_prime;  // J D = eps' D J
  MeasuredSign eps_dprime; // J gamma = eps'' gamma J

  LinearOp conjugate(const LinearOp& x) const { return j.sandwich(x); }
  /// Right action xi.b = J b^* J^* xi.
  LinearOp right_action(const LinearOp& b) const { return j.sandwich(b.adjoint()); }
};

/// Measures the signs of J against (D, gamma) and checks antiunitarity,
/// the commutant (zeroth-order) and first-order conditions.
RealStructure make_real_structure(const N1Data& data, const AntilinearOp& j,
                                  const Tolerance& tol);
CheckReport verify_real_structure(const N1Data& data, const RealStructure& rs,
                                  const Tolerance& tol);

struct KoClassification {
  bool consistent = false;
  std::set<int> dims;
};

/// All KO-dimensions in Z_8 whose sign row matches the measured signs.
/// Even rows use (eps, eps', eps''), odd rows only (eps, eps'); the odd-row
/// eps'' column is blank in the sign table and is never inferred.
KoClassification classify_ko(const RealStructure& rs, bool with_gamma);

/// (A1 ox A2, H1 ox H2, D1 ox 1 + gamma1 ox D2, gamma1 ox gamma2).
N1Data kasparov_product(const N1Data& d1, const N1Data& d2, const Tolerance& tol);

/// (1 ox 1 + g1 ox 1 + 1 ox g2 - g1 ox g2)/2 for self-adjoint involutions;
/// conjugates D1 ox 1 + g1 ox D2 into D1 ox g2 + 1 ox D2 whenever {g1, D1} = 0.
LinearOp equivalence_unitary(const LinearOp& g1, const LinearOp& g2,
                             const Tolerance& tol);

struct EquivalenceUnitaries {
  LinearOp u;  // built from (star1, gamma2)
  LinearOp v;  // built from (gamma1, gamma2)
};
EquivalenceUnitaries equivalence_unitaries(const LinearOp& star1,
                                           const LinearOp& gamma1,
                                           const LinearOp& gamma2,
                                           const Tolerance& tol);

/// J = J1 ox J2 with signs re-measured against the product data.
RealStructure tensor_real_structure(const N1Data& product, const RealStructure& rs1,
                                    const RealStructure& rs2, const Tolerance& tol);

}  // namespace susyspec

#endif

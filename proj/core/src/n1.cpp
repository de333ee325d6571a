#include "susyspec/n1.hpp"

namespace susyspec {

CheckReport verify_n1(const N1Data& data, const Tolerance& tol) {
  CheckReport r;
  const auto& a = data.algebra;
  const auto& d = data.dirac;
  const auto& g = data.grading;
  const Eigen::Index n = data.hilbert_dim();
  const LinearOp id = LinearOp::Identity(n, n);

  r.measured("Def2.1(1)", "algebra-unital", a.identity_residual(), tol.eq_tol);
  r.measured("Def2.1(1)", "algebra-star-closed", a.adjoint_closure_residual(), tol.eq_tol);
  r.measured("Def2.1(1)", "algebra-product-closed", a.product_closure_residual(), tol.eq_tol);
  r.boolean("Def2.1(1)", "representation-faithful", a.faithful());
  r.measured("Def2.1(2)", "dirac-self-adjoint", operator_norm(LinearOp(d - d.adjoint())),
             tol.eq_tol);
  r.trivially_true("Def2.1(2a)", "bounded-commutators-finite-dim");
  r.trivially_true("Def2.1(2b)", "heat-trace-summable-finite-dim");
  r.measured("Def2.1(3)", "grading-involution", operator_norm(LinearOp(g * g - id)),
             tol.eq_tol);
  r.measured("Def2.1(3)", "grading-self-adjoint", operator_norm(LinearOp(g - g.adjoint())),
             tol.eq_tol);
  double worst_comm = 0.0;
  for (const auto& x : a.basis())
    worst_comm = std::max(worst_comm, operator_norm(commutator(g, x)));
  r.measured("Def2.1(3)", "grading-commutes-algebra", worst_comm, tol.eq_tol);
  r.measured("Def2.1(3)", "grading-anticommutes-dirac", operator_norm(anticommutator(g, d)),
             tol.eq_tol);
  return r;
}

namespace {

MeasuredSign measure_sign(const LinearOp& x, const LinearOp& reference,
                          const Tolerance& tol) {
  MeasuredSign s;
  const double plus = operator_norm(LinearOp(x - reference));
  const double minus = operator_norm(LinearOp(x + reference));
  if (operator_norm(reference) <= tol.eq_tol) {
    s.value = 0;
    s.residual = std::min(plus, minus);
    return s;
  }
  s.value = plus <= minus ? +1 : -1;
  s.residual = std::min(plus, minus);
  return s;
}

}  // namespace

RealStructure make_real_structure(const N1Data& data, const AntilinearOp& j,
                                  const Tolerance& tol) {
  RealStructure rs;
  rs.j = j;
  const Eigen::Index n = data.hilbert_dim();
  const LinearOp id = LinearOp::Identity(n, n);
  rs.eps = measure_sign(compose(j, j), id, tol);
  rs.eps_prime = measure_sign(j.sandwich(data.dirac), data.dirac, tol);
  rs.eps_dprime = measure_sign(j.sandwich(data.grading), data.grading, tol);
  return rs;
}

CheckReport verify_real_structure(const N1Data& data, const RealStructure& rs,
                                  const Tolerance& tol) {
  CheckReport r;
  r.measured("RS", "J-antiunitary",
             operator_norm(LinearOp(rs.j.coeff() * rs.j.coeff().adjoint() -
                                    LinearOp::Identity(data.hilbert_dim(),
                                                       data.hilbert_dim()))),
             tol.eq_tol);
  r.measured("RS", "J-squared-sign", rs.eps.residual, tol.eq_tol);
  r.measured("RS", "J-dirac-sign", rs.eps_prime.residual, tol.eq_tol);
  r.measured("RS", "J-grading-sign", rs.eps_dprime.residual, tol.eq_tol);

  double zeroth = 0.0, first = 0.0;
  for (const auto& a : data.algebra.basis()) {
    const LinearOp ra = rs.right_action(a);
    for (const auto& b : data.algebra.basis()) {
      zeroth = std::max(zeroth, operator_norm(commutator(ra, b)));
      first = std::max(first,
                       operator_norm(commutator(ra, commutator(data.dirac, b))));
    }
  }
  r.measured("RS-order0", "commutant-condition", zeroth, tol.eq_tol);
  r.measured("RS-order1", "first-order-condition", first, tol.eq_tol);
  return r;
}

KoClassification classify_ko(const RealStructure& rs, bool with_gamma) {
  // sign table, KO-dimension n in Z_8; odd rows leave eps'' blank
  struct Row { int n; int e; int ep; int epp; };
  static const Row kEven[] = {{0, +1, +1, +1}, {2, -1, +1, -1}, {4, -1, +1, +1}, {6, +1, +1, -1}};
  static const Row kOdd[] = {{1, +1, -1, 0}, {3, -1, +1, 0}, {5, -1, -1, 0}, {7, +1, +1, 0}};

  KoClassification out;
  if (with_gamma) {
    for (const auto& row : kEven)
      if (rs.eps.matches(row.e) && rs.eps_prime.matches(row.ep) &&
          rs.eps_dprime.matches(row.epp))
        out.dims.insert(row.n);
  } else {
    for (const auto& row : kOdd)
      if (rs.eps.matches(row.e) && rs.eps_prime.matches(row.ep))
        out.dims.insert(row.n);
  }
  out.consistent = !out.dims.empty();
  return out;
}

N1Data kasparov_product(const N1Data& d1, const N1Data& d2, const Tolerance& tol) {
  N1Data out;
  out.algebra = StarAlgebra::tensor(d1.algebra, d2.algebra, tol);
  const LinearOp i1 = LinearOp::Identity(d1.hilbert_dim(), d1.hilbert_dim());
  const LinearOp i2 = LinearOp::Identity(d2.hilbert_dim(), d2.hilbert_dim());
  out.dirac = kronecker(d1.dirac, i2) + kronecker(d1.grading, d2.dirac);
  out.grading = kronecker(d1.grading, d2.grading);
  return out;
}

LinearOp equivalence_unitary(const LinearOp& g1, const LinearOp& g2,
                             const Tolerance& tol) {
  auto check_involution = [&](const LinearOp& g, const char* which) {
    const LinearOp id = LinearOp::Identity(g.rows(), g.cols());
    if (operator_norm(LinearOp(g * g - id)) > tol.eq_tol ||
        operator_norm(LinearOp(g - g.adjoint())) > tol.eq_tol)
      throw std::invalid_argument(std::string("equivalence_unitary: ") + which +
                                  " is not a self-adjoint involution");
  };
  check_involution(g1, "g1");
  check_involution(g2, "g2");
  const LinearOp i1 = LinearOp::Identity(g1.rows(), g1.cols());
  const LinearOp i2 = LinearOp::Identity(g2.rows(), g2.cols());
  return 0.5 * (kronecker(i1, i2) + kronecker(g1, i2) + kronecker(i1, g2) -
                kronecker(g1, g2));
}

EquivalenceUnitaries equivalence_unitaries(const LinearOp& star1,
                                           const LinearOp& gamma1,
                                           const LinearOp& gamma2,
                                           const Tolerance& tol) {
  EquivalenceUnitaries out;
  out.u = equivalence_unitary(star1, gamma2, tol);
  out.v = equivalence_unitary(gamma1, gamma2, tol);
  return out;
}

RealStructure tensor_real_structure(const N1Data& product, const RealStructure& rs1,
                                    const RealStructure& rs2, const Tolerance& tol) {
  return make_real_structure(product, kronecker(rs1.j, rs2.j), tol);
}

}  // namespace susyspec

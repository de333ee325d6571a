#include "susyspec/multiplicativity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace susyspec {

namespace {

/// Permutation (E1 ox E2) ox (E1 ox E2) -> (E1 ox E1) ox (E2 ox E2).
LinearOp middle_flip(Eigen::Index d1, Eigen::Index d2) {
  const Eigen::Index n = (d1 * d2) * (d1 * d2);
  LinearOp s = LinearOp::Zero(n, n);
  for (Eigen::Index i1 = 0; i1 < d1; ++i1)
    for (Eigen::Index i2 = 0; i2 < d2; ++i2)
      for (Eigen::Index j1 = 0; j1 < d1; ++j1)
        for (Eigen::Index j2 = 0; j2 < d2; ++j2)
          s((i1 * d1 + j1) * d2 * d2 + (i2 * d2 + j2),
            (i1 * d2 + i2) * d1 * d2 + (j1 * d2 + j2)) = 1.0;
  return s;
}

/// Coordinates of product-module elements against the kron basis of the
/// factor modules (identity whenever the embeddings are identities).
LinearOp kron_basis_change(const ExtensionPipeline& p1, const ExtensionPipeline& p2,
                           const ProductPipeline& pp) {
  const Eigen::Index m1 = p1.setup.e_dim(), m2 = p2.setup.e_dim();
  const LinearOp& b1 = p1.setup.module.embedding();
  const LinearOp& b2 = p2.setup.module.embedding();
  const LinearOp& bp = pp.pipeline.setup.module.embedding();
  LinearOp k(bp.cols(), m1 * m2);
  for (Eigen::Index i = 0; i < m1; ++i)
    for (Eigen::Index j = 0; j < m2; ++j)
      k.col(i * m2 + j) = bp.adjoint() * kron_vec(b1.col(i), b2.col(j));
  return k;
}

}  // namespace

ProductPipeline make_product_pipeline(const ExtensionPipeline& p1,
                                      const ExtensionPipeline& p2, HodgeChoice hodge) {
  const Tolerance tol = p1.setup.tol;
  ProductPipeline out;

  N1Data prod = kasparov_product(p1.setup.data, p2.setup.data, tol);
  RealStructure rs = tensor_real_structure(prod, p1.setup.rs, p2.setup.rs, tol);
  out.one_forms = product_one_forms(p1.setup.data, p2.setup.data, prod, tol);
  out.hermitian =
      canonical_product_hermitian(prod, p1.setup.module, p2.setup.module, tol);

  out.pipeline.setup =
      make_setup(std::move(prod), std::move(rs), std::move(out.hermitian.module), tol);
  out.pipeline.connection = product_connection(p1.setup, p1.connection, p2.setup,
                                               p2.connection, out.pipeline.setup);
  out.pipeline.phi = phi(out.pipeline.setup, out.pipeline.connection, hodge);
  return out;
}

CanonicalIso canonical_iso(const ExtensionPipeline& p1, const ExtensionPipeline& p2,
                           const ProductPipeline& pp) {
  const SpectralSetup& s1 = p1.setup;
  const SpectralSetup& s2 = p2.setup;
  const SpectralSetup& sp = pp.pipeline.setup;
  const Eigen::Index m1 = s1.e_dim(), m2 = s2.e_dim();
  const Tolerance& tol = sp.tol;

  // lift product EE ambient (kron-module basis) and flip the middle factors
  const LinearOp kb = kron_basis_change(p1, p2, pp);
  const LinearOp flip = middle_flip(m1, m2);
  const LinearOp to_pair_ambient = flip * kronecker(kb.adjoint(), kb.adjoint());
  CanonicalIso iso;
  iso.matrix = kronecker(s1.ee.space.coord_map(), s2.ee.space.coord_map()) *
               to_pair_ambient * sp.ee.space.section();

  const Eigen::Index qp = sp.ee.space.dim();
  const Eigen::Index q12 = s1.ee.space.dim() * s2.ee.space.dim();
  if (qp != q12)
    throw std::runtime_error("canonical_iso: balanced model dimensions disagree");
  iso.unitarity = std::max(
      operator_norm(LinearOp(iso.matrix.adjoint() * iso.matrix -
                             LinearOp::Identity(qp, qp))),
      operator_norm(LinearOp(iso.matrix * iso.matrix.adjoint() -
                             LinearOp::Identity(q12, q12))));
  if (iso.unitarity > 1e3 * tol.eq_tol)
    throw std::runtime_error("canonical_iso: identification is not unitary");

  auto transport = [&](const LinearOp& x) -> LinearOp {
    return iso.matrix * x * iso.matrix.adjoint();
  };

  double worst = 0.0;
  const LinearOp i2h = LinearOp::Identity(s2.data.hilbert_dim(), s2.data.hilbert_dim());
  const Eigen::Index q2 = s2.ee.space.dim();
  for (const auto& a1 : s1.data.algebra.basis()) {
    LinearOp ap = sp.algebra_on_ee(kronecker(a1, i2h));
    LinearOp a12 = kronecker(s1.algebra_on_ee(a1),
                             LinearOp(LinearOp::Identity(q2, q2)));
    worst = std::max(worst, operator_norm(LinearOp(transport(ap) - a12)));
  }
  iso.algebra_intertwine = worst;

  iso.grading_intertwine = operator_norm(
      LinearOp(transport(pp.pipeline.phi.candidate.grading) -
               kronecker(p1.phi.candidate.grading, p2.phi.candidate.grading)));
  iso.hodge_intertwine = operator_norm(
      LinearOp(transport(pp.pipeline.phi.candidate.hodge) -
               kronecker(p1.phi.candidate.hodge, p2.phi.candidate.hodge)));
  return iso;
}

MultiplicativityResult check_multiplicativity(const ExtensionPipeline& p1,
                                              const ExtensionPipeline& p2,
                                              const ProductPipeline& pp,
                                              const std::vector<ProductVariant>& variants,
                                              const Tolerance& tol) {
  MultiplicativityResult out;
  out.iso = canonical_iso(p1, p2, pp);
  out.report.measured("Iso", "unitary", out.iso.unitarity, tol.eq_tol);
  out.report.measured("Iso", "algebra-intertwine", out.iso.algebra_intertwine, tol.eq_tol);
  out.report.measured("Iso", "grading-intertwine", out.iso.grading_intertwine, tol.eq_tol);
  out.report.measured("Iso", "hodge-intertwine", out.iso.hodge_intertwine, tol.eq_tol);

  const LinearOp& y = out.iso.matrix;
  const LinearOp d_t = y * pp.pipeline.phi.candidate.d_frak * y.adjoint();
  const LinearOp db_t = y * pp.pipeline.phi.candidate.d_bar * y.adjoint();

  // transport preserves spectra; compare sorted eigenvalues
  Eigen::SelfAdjointEigenSolver<LinearOp> e1(pp.pipeline.phi.candidate.d_frak);
  Eigen::SelfAdjointEigenSolver<LinearOp> e2(d_t);
  double spec = 0.0;
  for (Eigen::Index k = 0; k < e1.eigenvalues().size(); ++k)
    spec = std::max(spec, std::abs(e1.eigenvalues()(k) - e2.eigenvalues()(k)));
  out.spectrum_preservation = spec;
  out.report.measured("Transport", "spectrum-preserved", spec, tol.eq_tol);

  double max_dist = 0.0;
  for (ProductVariant v : variants) {
    N11Data prod = n11_product(p1.phi.candidate, p2.phi.candidate, v, tol);
    VariantVerdict verdict;
    verdict.variant = v;
    verdict.residual_d = operator_norm(LinearOp(d_t - prod.d_frak));
    verdict.residual_dbar = operator_norm(LinearOp(db_t - prod.d_bar));
    verdict.equal = verdict.residual_d <= tol.eq_tol && verdict.residual_dbar <= tol.eq_tol;
    max_dist = std::max(max_dist, std::max(verdict.residual_d, verdict.residual_dbar));
    out.verdicts.push_back(verdict);
  }
  out.degenerate = max_dist <= tol.eq_tol;
  if (out.degenerate)
    out.report.caveats.push_back("degenerate-equality: all requested variants coincide");
  for (const auto& v : out.verdicts) {
    const std::string name(variant_name(v.variant));
    if (v.variant == ProductVariant::kMain) {
      out.report.measured("Thm-positive", "main-dirac-match", v.residual_d, tol.eq_tol);
      out.report.measured("Thm-positive", "main-dirac-bar-match", v.residual_dbar,
                          tol.eq_tol);
    } else {
      out.report.boolean("Thm-negative", name + "-witnessed-unequal",
                         std::max(v.residual_d, v.residual_dbar) > 1e-6);
    }
  }
  return out;
}

LemmaChainTrace product_pipeline_trace(const ExtensionPipeline& p1,
                                       const ExtensionPipeline& p2,
                                       const ProductPipeline& pp, const Tolerance& tol) {
  LemmaChainTrace t;
  const SpectralSetup& s1 = p1.setup;
  const SpectralSetup& s2 = p2.setup;
  const SpectralSetup& sp = pp.pipeline.setup;
  const Eigen::Index m1 = s1.e_dim(), m2 = s2.e_dim();
  const Eigen::Index qw1 = s1.omega_dim(), qw2 = s2.omega_dim();
  const Eigen::Index mp = sp.e_dim();
  const Eigen::Index qwp = sp.omega_dim();
  const LinearOp i1 = LinearOp::Identity(m1, m1);
  const LinearOp i2 = LinearOp::Identity(m2, m2);
  const LinearOp i2h = LinearOp::Identity(s2.data.hilbert_dim(), s2.data.hilbert_dim());

  t.omega_decomposition_direct = pp.one_forms.overlap;
  t.omega_decomposition_equality = pp.one_forms.equality_residual;
  t.product_differential =
      std::max(pp.one_forms.differential_residual, pp.one_forms.leibniz_residual);

  // product one-form coordinates of the two embeddings
  std::vector<Vector> w1c, w2c;
  for (Eigen::Index al = 0; al < qw1; ++al)
    w1c.push_back(sp.forms.coords(kronecker(s1.forms.basis_op(al), i2h)).coeffs);
  for (Eigen::Index be = 0; be < qw2; ++be)
    w2c.push_back(
        sp.forms.coords(kronecker(s1.data.grading, s2.forms.basis_op(be))).coeffs);
  const LinearOp kb = kron_basis_change(p1, p2, pp);

  // identification (Omega1 ox_A1 E1) ox E2 (+) E1 ox (Omega2 ox_A2 E2) -> OE_prod
  auto lift_oe1 = [&](Eigen::Index k) { return s1.oe.space.section().col(k); };
  auto lift_oe2 = [&](Eigen::Index k) { return s2.oe.space.section().col(k); };
  LinearOp t1(sp.oe.space.dim(), s1.oe.space.dim() * m2);
  for (Eigen::Index k = 0; k < s1.oe.space.dim(); ++k) {
    Vector amb = lift_oe1(k);  // [al, i1]
    for (Eigen::Index j2 = 0; j2 < m2; ++j2) {
      Vector v = Vector::Zero(qwp * mp);
      for (Eigen::Index al = 0; al < qw1; ++al) {
        Vector e12 = Vector::Zero(m1 * m2);
        for (Eigen::Index i = 0; i < m1; ++i)
          e12(i * m2 + j2) = amb(al * m1 + i);
        v += kron_vec(w1c[static_cast<size_t>(al)], Vector(kb * e12));
      }
      t1.col(k * m2 + j2) = sp.oe.space.coords(v);
    }
  }
  LinearOp t2(sp.oe.space.dim(), m1 * s2.oe.space.dim());
  for (Eigen::Index j1 = 0; j1 < m1; ++j1) {
    for (Eigen::Index k = 0; k < s2.oe.space.dim(); ++k) {
      Vector amb = lift_oe2(k);  // [be, i2]
      Vector v = Vector::Zero(qwp * mp);
      for (Eigen::Index be = 0; be < qw2; ++be) {
        Vector e12 = Vector::Zero(m1 * m2);
        for (Eigen::Index i = 0; i < m2; ++i)
          e12(j1 * m2 + i) = amb(be * m2 + i);
        v += kron_vec(w2c[static_cast<size_t>(be)], Vector(kb * e12));
      }
      t2.col(j1 * s2.oe.space.dim() + k) = sp.oe.space.coords(v);
    }
  }

  // identification (E1 ox_A1 Omega1) ox E2 (+) E1 ox (E2 ox_A2 Omega2) -> EO_prod
  LinearOp u1(sp.eo.space.dim(), s1.eo.space.dim() * m2);
  for (Eigen::Index k = 0; k < s1.eo.space.dim(); ++k) {
    Vector amb = s1.eo.space.section().col(k);  // [i1, al]
    for (Eigen::Index j2 = 0; j2 < m2; ++j2) {
      Vector v = Vector::Zero(mp * qwp);
      for (Eigen::Index al = 0; al < qw1; ++al) {
        Vector e12 = Vector::Zero(m1 * m2);
        for (Eigen::Index i = 0; i < m1; ++i)
          e12(i * m2 + j2) = amb(i * qw1 + al);
        v += kron_vec(Vector(kb * e12), w1c[static_cast<size_t>(al)]);
      }
      u1.col(k * m2 + j2) = sp.eo.space.coords(v);
    }
  }
  LinearOp u2(sp.eo.space.dim(), m1 * s2.eo.space.dim());
  for (Eigen::Index j1 = 0; j1 < m1; ++j1) {
    for (Eigen::Index k = 0; k < s2.eo.space.dim(); ++k) {
      Vector amb = s2.eo.space.section().col(k);  // [i2, be]
      Vector v = Vector::Zero(mp * qwp);
      for (Eigen::Index be = 0; be < qw2; ++be) {
        Vector e12 = Vector::Zero(m1 * m2);
        for (Eigen::Index i = 0; i < m2; ++i)
          e12(j1 * m2 + i) = amb(i * qw2 + be);
        v += kron_vec(Vector(kb * e12), w2c[static_cast<size_t>(be)]);
      }
      u2.col(j1 * s2.eo.space.dim() + k) = sp.eo.space.coords(v);
    }
  }

  // flip decomposition: Psi_p o T1 = U1 (Psi1 ox J2), Psi_p o T2 = U2 (J1 ox Psi2)
  const LinearOp je1 =
      s1.module.embedding().adjoint() * s1.rs.j.coeff() * s1.module.embedding().conjugate();
  const LinearOp je2 =
      s2.module.embedding().adjoint() * s2.rs.j.coeff() * s2.module.embedding().conjugate();
  t.psi_first = operator_norm(LinearOp(pp.pipeline.phi.psi.coeff * t1.conjugate() -
                                       u1 * kronecker(p1.phi.psi.coeff, je2)));
  t.psi_second = operator_norm(LinearOp(pp.pipeline.phi.psi.coeff * t2.conjugate() -
                                        u2 * kronecker(je1, p2.phi.psi.coeff)));

  // right connection: nabla_bar_p = U1 (nb1 ox 1) + U2 (1 ox nb2) against kron coords
  {
    LinearOp lhs = pp.pipeline.phi.nabla_bar * kb;  // columns over kron basis
    LinearOp rhs = u1 * kronecker(p1.phi.nabla_bar, i2) +
                   u2 * kronecker(i1, p2.phi.nabla_bar);
    t.nabla_bar_decomposition = operator_norm(LinearOp(lhs - rhs));
  }

  // triple-space identification
  const LinearOp flip = middle_flip(m1, m2);
  const LinearOp pair_coords =
      kronecker(s1.ee.space.coord_map(), s2.ee.space.coord_map()) * flip *
      kronecker(kb.adjoint(), kb.adjoint());
  const LinearOp yee = pair_coords * sp.ee.space.section();

  auto make_w1 = [&]() {
    LinearOp w(sp.eoe.dim(), s1.eoe.dim() * s2.ee.space.dim());
    for (Eigen::Index k1 = 0; k1 < s1.eoe.dim(); ++k1) {
      Vector amb1 = s1.eoe.section().col(k1);  // [(i1,al),j1]
      for (Eigen::Index k2 = 0; k2 < s2.ee.space.dim(); ++k2) {
        Vector amb2 = s2.ee.space.section().col(k2);  // [i2,j2]
        Vector v = Vector::Zero(mp * qwp * mp);
        for (Eigen::Index i1a = 0; i1a < m1; ++i1a)
          for (Eigen::Index al = 0; al < qw1; ++al)
            for (Eigen::Index j1 = 0; j1 < m1; ++j1) {
              const Complex c1 = amb1((i1a * qw1 + al) * m1 + j1);
              if (c1 == Complex(0, 0)) continue;
              for (Eigen::Index i2a = 0; i2a < m2; ++i2a)
                for (Eigen::Index j2 = 0; j2 < m2; ++j2) {
                  const Complex c2 = amb2(i2a * m2 + j2);
                  if (c2 == Complex(0, 0)) continue;
                  Vector xi = Vector::Zero(m1 * m2), eta = Vector::Zero(m1 * m2);
                  xi(i1a * m2 + i2a) = 1.0;
                  eta(j1 * m2 + j2) = 1.0;
                  v += c1 * c2 *
                       kron_vec(kron_vec(Vector(kb * xi), w1c[static_cast<size_t>(al)]),
                                Vector(kb * eta));
                }
            }
        w.col(k1 * s2.ee.space.dim() + k2) = sp.eoe.coords(v);
      }
    }
    return w;
  };
  auto make_w2 = [&]() {
    LinearOp w(sp.eoe.dim(), s1.ee.space.dim() * s2.eoe.dim());
    for (Eigen::Index k1 = 0; k1 < s1.ee.space.dim(); ++k1) {
      Vector amb1 = s1.ee.space.section().col(k1);  // [i1,j1]
      for (Eigen::Index k2 = 0; k2 < s2.eoe.dim(); ++k2) {
        Vector amb2 = s2.eoe.section().col(k2);  // [(i2,be),j2]
        Vector v = Vector::Zero(mp * qwp * mp);
        for (Eigen::Index i1a = 0; i1a < m1; ++i1a)
          for (Eigen::Index j1 = 0; j1 < m1; ++j1) {
            const Complex c1 = amb1(i1a * m1 + j1);
            if (c1 == Complex(0, 0)) continue;
            for (Eigen::Index i2a = 0; i2a < m2; ++i2a)
              for (Eigen::Index be = 0; be < qw2; ++be)
                for (Eigen::Index j2 = 0; j2 < m2; ++j2) {
                  const Complex c2 = amb2((i2a * qw2 + be) * m2 + j2);
                  if (c2 == Complex(0, 0)) continue;
                  Vector xi = Vector::Zero(m1 * m2), eta = Vector::Zero(m1 * m2);
                  xi(i1a * m2 + i2a) = 1.0;
                  eta(j1 * m2 + j2) = 1.0;
                  v += c1 * c2 *
                       kron_vec(kron_vec(Vector(kb * xi), w2c[static_cast<size_t>(be)]),
                                Vector(kb * eta));
                }
          }
        w.col(k1 * s2.eoe.dim() + k2) = sp.eoe.coords(v);
      }
    }
    return w;
  };
  const LinearOp w1 = make_w1();
  const LinearOp w2 = make_w2();

  const Eigen::Index q1 = s1.ee.space.dim(), q2 = s2.ee.space.dim();
  t.nabla_tilde_decomposition = operator_norm(LinearOp(
      pp.pipeline.phi.nabla_tilde.matrix -
      (w1 * kronecker(p1.phi.nabla_tilde.matrix, LinearOp(LinearOp::Identity(q2, q2))) +
       w2 * kronecker(LinearOp(LinearOp::Identity(q1, q1)), p2.phi.nabla_tilde.matrix)) *
          yee));

  t.c_first = operator_norm(LinearOp(
      yee * pp.pipeline.phi.contr.c * w1 -
      kronecker(p1.phi.contr.c, LinearOp(LinearOp::Identity(q2, q2)))));
  t.c_second = operator_norm(LinearOp(yee * pp.pipeline.phi.contr.c * w2 -
                                      kronecker(p1.phi.candidate.hodge, p2.phi.contr.c)));
  t.cbar_first = operator_norm(LinearOp(yee * pp.pipeline.phi.contr.cbar * w1 -
                                        kronecker(p1.phi.contr.cbar, p2.phi.candidate.hodge)));
  t.cbar_second =
      operator_norm(LinearOp(yee * pp.pipeline.phi.contr.cbar * w2 -
                             kronecker(p1.phi.candidate.grading, p2.phi.contr.cbar)));

  // final operator formulas under the canonical identification
  const LinearOp d_t = yee * pp.pipeline.phi.candidate.d_frak * yee.adjoint();
  const LinearOp db_t = yee * pp.pipeline.phi.candidate.d_bar * yee.adjoint();
  const LinearOp iq2 = LinearOp::Identity(q2, q2);
  t.dirac_formula = operator_norm(
      LinearOp(d_t - kronecker(p1.phi.candidate.d_frak, iq2) -
               kronecker(p1.phi.candidate.hodge, p2.phi.candidate.d_frak)));
  t.dirac_bar_formula = operator_norm(
      LinearOp(db_t - kronecker(p1.phi.candidate.d_bar, p2.phi.candidate.hodge) -
               kronecker(p1.phi.candidate.grading, p2.phi.candidate.d_bar)));
  t.transported_squares = operator_norm(LinearOp(d_t * d_t - db_t * db_t));
  t.transported_anticommute = operator_norm(anticommutator(d_t, db_t));

  CheckReport& r = t.report;
  r.measured("OmegaDecomp", "summands-independent", t.omega_decomposition_direct, tol.eq_tol);
  r.measured("OmegaDecomp", "summands-span", t.omega_decomposition_equality, tol.eq_tol);
  r.measured("ProdDifferential", "component-form", t.product_differential, tol.eq_tol);
  r.measured("FlipDecomp", "first-summand", t.psi_first, tol.eq_tol);
  r.measured("FlipDecomp", "second-summand", t.psi_second, tol.eq_tol);
  r.measured("RightConnDecomp", "sum-form", t.nabla_bar_decomposition, tol.eq_tol);
  r.measured("TensoredConnDecomp", "sum-form", t.nabla_tilde_decomposition, tol.eq_tol);
  r.measured("ContractionDecomp", "c-first", t.c_first, tol.eq_tol);
  r.measured("ContractionDecomp", "c-second", t.c_second, tol.eq_tol);
  r.measured("ContractionDecomp", "cbar-first", t.cbar_first, tol.eq_tol);
  r.measured("ContractionDecomp", "cbar-second", t.cbar_second, tol.eq_tol);
  r.measured("DiracFormula", "dirac", t.dirac_formula, tol.eq_tol);
  r.measured("DiracFormula", "dirac-bar", t.dirac_bar_formula, tol.eq_tol);
  r.measured("TransportedRelations", "squares-equal", t.transported_squares, tol.eq_tol);
  r.measured("TransportedRelations", "anticommute", t.transported_anticommute, tol.eq_tol);
  return t;
}

}  // namespace susyspec

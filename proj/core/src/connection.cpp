#include "susyspec/connection.hpp"

#include <Eigen/SVD>
#include <random>

namespace susyspec {

LinearOp SpectralSetup::grading_on_e() const {
  const LinearOp& b = module.embedding();
  return b.adjoint() * data.grading * b;
}

LinearOp SpectralSetup::j_star_on_e_coeff() const {
  const LinearOp& b = module.embedding();
  return b.adjoint() * rs.j.coeff().transpose() * b.conjugate();
}

LinearOp SpectralSetup::algebra_on_ee(const LinearOp& a) const {
  const LinearOp& b = module.embedding();
  LinearOp ae = b.adjoint() * a * b;
  const LinearOp ie = LinearOp::Identity(e_dim(), e_dim());
  return ee.space.descend(kronecker(ae, ie), ee.space);
}

SpectralSetup make_setup(N1Data data, RealStructure rs, HermitianModule module,
                         const Tolerance& tol) {
  SpectralSetup s;
  s.data = std::move(data);
  s.rs = std::move(rs);
  s.module = std::move(module);
  s.tol = tol;
  s.forms = OneForms(s.data, tol);
  s.actions = bimodule_actions(s.data, s.rs, s.forms, tol);
  s.e_space = module_action_space(s.module, s.rs);
  s.omega_space = forms_action_space(s.forms, s.data);
  s.oe = balanced_tensor(s.omega_space, s.e_space, tol);
  s.eo = balanced_tensor(s.e_space, s.omega_space, tol);
  s.ee = balanced_e_tensor_e(s.module, s.rs, tol);
  BalancedPair stage2 = balanced_tensor(s.eo.induced, s.e_space, tol);
  s.eoe = QuotientSpace::staged(s.eo.space, s.e_space.dim, stage2.space);
  return s;
}

Connection grassmann(const SpectralSetup& s) {
  const Eigen::Index m = s.e_dim();
  const Eigen::Index qw = s.omega_dim();
  const LinearOp& b = s.module.embedding();
  const Eigen::Index n = s.module.n_generators();

  LinearOp amb = LinearOp::Zero(qw * m, m);
  for (Eigen::Index col = 0; col < m; ++col) {
    auto slots = s.module.coordinates(b.col(col));
    for (Eigen::Index j = 0; j < n; ++j) {
      LinearOp dxj = commutator(s.data.dirac, slots[static_cast<size_t>(j)]);
      OneForms::Coords co = s.forms.coords(dxj);
      Vector row_e = b.adjoint() * s.module.row_embedding(j);
      amb.col(col) += kron_vec(co.coeffs, row_e);
    }
  }
  Connection c;
  c.grassmann_part = s.oe.space.coord_map() * amb;
  c.perturbation = LinearOp::Zero(c.grassmann_part.rows(), c.grassmann_part.cols());
  return c;
}

Connection perturbed(const Connection& base, const LinearOp& alpha) {
  Connection c = base;
  if (alpha.rows() != c.perturbation.rows() || alpha.cols() != c.perturbation.cols())
    throw std::invalid_argument("perturbed: alpha has wrong shape");
  c.perturbation += alpha;
  return c;
}

namespace {

/// <nabla xi, eta> = sum w_alpha <h_alpha, eta>_A for nabla xi lifted to the
/// plain Omega ox E model.
LinearOp pair_nabla_eta(const SpectralSetup& s, const Vector& nabla_coords,
                        const Vector& eta_h) {
  const Eigen::Index m = s.e_dim(), qw = s.omega_dim();
  const Eigen::Index dim = s.data.hilbert_dim();
  Vector amb = s.oe.space.lift(nabla_coords);
  LinearOp out = LinearOp::Zero(dim, dim);
  const LinearOp& b = s.module.embedding();
  for (Eigen::Index al = 0; al < qw; ++al) {
    Vector h = b * amb.segment(al * m, m);
    out += s.forms.basis_op(al) * s.module.inner_product_A(h, eta_h);
  }
  return out;
}

LinearOp pair_eta_nabla(const SpectralSetup& s, const Vector& xi_h,
                        const Vector& nabla_coords) {
  const Eigen::Index m = s.e_dim(), qw = s.omega_dim();
  const Eigen::Index dim = s.data.hilbert_dim();
  Vector amb = s.oe.space.lift(nabla_coords);
  LinearOp out = LinearOp::Zero(dim, dim);
  const LinearOp& b = s.module.embedding();
  for (Eigen::Index al = 0; al < qw; ++al) {
    Vector h = b * amb.segment(al * m, m);
    out += s.module.inner_product_A(xi_h, h) * s.forms.basis_op(al).adjoint();
  }
  return out;
}

}  // namespace

CheckReport verify_connection(const SpectralSetup& s, const Connection& c) {
  CheckReport r;
  const Eigen::Index m = s.e_dim(), qw = s.omega_dim();
  const LinearOp nabla = c.total();
  const LinearOp im = LinearOp::Identity(m, m);

  // (a) Leibniz over the algebra basis
  double leibniz = 0.0;
  for (Eigen::Index ai = 0; ai < s.data.algebra.dim(); ++ai) {
    const LinearOp& la = s.e_space.left[static_cast<size_t>(ai)];
    const LinearOp a_on_oe = s.oe.space.descend(
        kronecker(s.omega_space.left[static_cast<size_t>(ai)], im), s.oe.space);
    OneForms::Coords da = s.forms.dirac_d(s.data.algebra.basis_op(ai));
    LinearOp da_tensor = s.oe.space.coord_map() *
                         kronecker(LinearOp(da.coeffs), im);
    leibniz = std::max(leibniz, operator_norm(LinearOp(
                                    nabla * la - a_on_oe * nabla - da_tensor)));
  }
  r.measured("Def2.9(a)", "leibniz", leibniz, s.tol.eq_tol);

  // (b) metric compatibility over basis pairs
  double compat = 0.0;
  const LinearOp& b = s.module.embedding();
  for (Eigen::Index i = 0; i < m; ++i) {
    Vector xi = b.col(i);
    Vector nxi = nabla.col(i);
    for (Eigen::Index j = 0; j < m; ++j) {
      Vector eta = b.col(j);
      LinearOp lhs = pair_nabla_eta(s, nxi, eta) -
                     pair_eta_nabla(s, xi, Vector(nabla.col(j)));
      LinearOp rhs = commutator(s.data.dirac, s.module.inner_product_A(xi, eta));
      compat = std::max(compat, operator_norm(LinearOp(lhs - rhs)));
    }
  }
  r.measured("Def2.9(b)", "metric-compatibility", compat, s.tol.eq_tol);

  // grading commutation nabla(gamma xi) = (1 ox gamma) nabla xi
  const LinearOp ge = s.grading_on_e();
  const LinearOp g_on_oe = s.oe.space.descend(
      kronecker(LinearOp(LinearOp::Identity(qw, qw)), ge), s.oe.space);
  r.measured("Phi-pre", "grading-commutation",
             operator_norm(LinearOp(nabla * ge - g_on_oe * nabla)), s.tol.eq_tol);
  return r;
}

LinearOp module_map_basis(const SpectralSetup& s, bool gamma_even) {
  const Eigen::Index m = s.e_dim();
  const Eigen::Index q = s.oe.space.dim();
  const LinearOp iq = LinearOp::Identity(q, q);
  const LinearOp im = LinearOp::Identity(m, m);
  std::vector<LinearOp> rows;
  for (Eigen::Index ai = 0; ai < s.data.algebra.dim(); ++ai) {
    const LinearOp& la = s.e_space.left[static_cast<size_t>(ai)];
    const LinearOp a_on_oe = s.oe.space.descend(
        kronecker(s.omega_space.left[static_cast<size_t>(ai)], im), s.oe.space);
    rows.push_back(kronecker(la.transpose(), iq) - kronecker(im, a_on_oe));
  }
  if (gamma_even) {
    const LinearOp ge = s.grading_on_e();
    const LinearOp g_on_oe = s.oe.space.descend(
        kronecker(LinearOp(LinearOp::Identity(s.omega_dim(), s.omega_dim())), ge),
        s.oe.space);
    rows.push_back(kronecker(ge.transpose(), iq) - kronecker(im, g_on_oe));
  }
  LinearOp stacked(static_cast<Eigen::Index>(rows.size()) * q * m, q * m);
  for (size_t k = 0; k < rows.size(); ++k)
    stacked.middleRows(static_cast<Eigen::Index>(k) * q * m, q * m) = rows[k];
  Eigen::BDCSVD<LinearOp> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > s.tol.rank_tol * std::max(scale, 1.0)) ++rank;
  return svd.matrixV().rightCols(q * m - rank);
}

LinearOp random_module_map(const SpectralSetup& s, std::uint64_t seed, double scale,
                           bool gamma_even) {
  LinearOp basis = module_map_basis(s, gamma_even);
  const Eigen::Index q = s.oe.space.dim();
  const Eigen::Index m = s.e_dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector co(basis.cols());
  for (Eigen::Index k = 0; k < co.size(); ++k) {
    const double re = dist(rng), imng = dist(rng);
    co(k) = Complex(re, imng);
  }
  Vector v = basis * co * scale;
  return unvectorize(v, q, m);
}

PsiMap flip_psi(const SpectralSetup& s) {
  const Eigen::Index m = s.e_dim(), qw = s.omega_dim();
  const LinearOp& b = s.module.embedding();
  const LinearOp je = b.adjoint() * s.rs.j.coeff() * b.conjugate();

  LinearOp amb = LinearOp::Zero(m * qw, qw * m);
  for (Eigen::Index al = 0; al < qw; ++al) {
    OneForms::Coords wstar = s.forms.coords(LinearOp(s.forms.basis_op(al).adjoint()));
    for (Eigen::Index i = 0; i < m; ++i)
      amb.col(al * m + i) = kron_vec(je.col(i), wstar.coeffs);
  }
  PsiMap psi;
  // the map acts as v -> amb conj(v), so its restriction to the relation
  // space uses the conjugated relation projector
  LinearOp x = s.eo.space.coord_map() * amb;
  const LinearOp& b0 = s.oe.space.std_section();
  psi.well_definedness =
      operator_norm(LinearOp(x - (x * b0.conjugate()) * b0.transpose()));
  psi.coeff = x * s.oe.space.section().conjugate();
  return psi;
}

LinearOp right_connection(const SpectralSetup& s, const Connection& c,
                          const PsiMap& psi) {
  const LinearOp jstar = s.j_star_on_e_coeff();
  return -psi.coeff * (c.total() * jstar).conjugate();
}

TensoredConnection tensored_connection(const SpectralSetup& s, const Connection& c,
                                       const LinearOp& nabla_bar) {
  const Eigen::Index m = s.e_dim();
  const LinearOp nabla = c.total();
  TensoredConnection out;
  out.ambient = LinearOp::Zero(s.eoe.dim(), m * m);
  std::vector<Vector> nb_lift(static_cast<size_t>(m)), na_lift(static_cast<size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    nb_lift[static_cast<size_t>(i)] = s.eo.space.lift(nabla_bar.col(i));
    na_lift[static_cast<size_t>(i)] = s.oe.space.lift(nabla.col(i));
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      Vector ei = Vector::Zero(m); ei(i) = 1.0;
      Vector ej = Vector::Zero(m); ej(j) = 1.0;
      Vector v = kron_vec(nb_lift[static_cast<size_t>(i)], ej) +
                 kron_vec(ei, na_lift[static_cast<size_t>(j)]);
      out.ambient.col(i * m + j) = s.eoe.coords(v);
    }
  }
  out.well_definedness = s.ee.space.well_definedness_of_coords(out.ambient);
  out.matrix = out.ambient * s.ee.space.section();
  return out;
}

Connection product_connection(const SpectralSetup& s1, const Connection& c1,
                              const SpectralSetup& s2, const Connection& c2,
                              const SpectralSetup& sp) {
  const Eigen::Index m1 = s1.e_dim(), m2 = s2.e_dim();
  const Eigen::Index mp = sp.e_dim();
  const Eigen::Index qw1 = s1.omega_dim(), qw2 = s2.omega_dim();
  const Eigen::Index h2 = s2.data.hilbert_dim();
  if (mp != m1 * m2)
    throw std::invalid_argument("product_connection: module dimension mismatch");

  const LinearOp& b1 = s1.module.embedding();
  const LinearOp& b2 = s2.module.embedding();
  const LinearOp& bp = sp.module.embedding();
  const LinearOp i2 = LinearOp::Identity(h2, h2);

  // product one-form coordinates of w1 ox 1 and gamma1 ox w2
  std::vector<Vector> w1_coords, w2_coords;
  double embed_res = 0.0;
  for (Eigen::Index al = 0; al < qw1; ++al) {
    auto co = sp.forms.coords(kronecker(s1.forms.basis_op(al), i2));
    embed_res = std::max(embed_res, co.residual);
    w1_coords.push_back(co.coeffs);
  }
  for (Eigen::Index be = 0; be < qw2; ++be) {
    auto co = sp.forms.coords(kronecker(s1.data.grading, s2.forms.basis_op(be)));
    embed_res = std::max(embed_res, co.residual);
    w2_coords.push_back(co.coeffs);
  }
  if (embed_res > sp.tol.eq_tol)
    throw std::runtime_error("product_connection: factor one-forms do not embed "
                             "into the product one-forms");

  const Eigen::Index qwp = sp.omega_dim();
  const LinearOp n1m = c1.total();
  const LinearOp n2m = c2.total();

  LinearOp n_kron = LinearOp::Zero(qwp * mp, m1 * m2);
  for (Eigen::Index i1 = 0; i1 < m1; ++i1) {
    for (Eigen::Index i2c = 0; i2c < m2; ++i2c) {
      Vector col = Vector::Zero(qwp * mp);
      // nabla_1 e_{i1} ox e_{i2}
      Vector amb1 = s1.oe.space.lift(n1m.col(i1));  // [al, k1]
      for (Eigen::Index al = 0; al < qw1; ++al) {
        Vector h1 = b1 * amb1.segment(al * m1, m1);
        Vector ep = bp.adjoint() * kron_vec(h1, b2.col(i2c));
        col += kron_vec(w1_coords[static_cast<size_t>(al)], ep);
      }
      // e_{i1} ox nabla_2 e_{i2}
      Vector amb2 = s2.oe.space.lift(n2m.col(i2c));
      for (Eigen::Index be = 0; be < qw2; ++be) {
        Vector h2v = b2 * amb2.segment(be * m2, m2);
        Vector ep = bp.adjoint() * kron_vec(b1.col(i1), h2v);
        col += kron_vec(w2_coords[static_cast<size_t>(be)], ep);
      }
      n_kron.col(i1 * m2 + i2c) = col;
    }
  }

  // transform source index from kron basis to the product module basis
  LinearOp kbasis(mp, m1 * m2);
  for (Eigen::Index i1 = 0; i1 < m1; ++i1)
    for (Eigen::Index i2c = 0; i2c < m2; ++i2c)
      kbasis.col(i1 * m2 + i2c) = bp.adjoint() * kron_vec(b1.col(i1), b2.col(i2c));

  Connection out;
  out.grassmann_part = sp.oe.space.coord_map() * n_kron * kbasis.adjoint();
  out.perturbation = LinearOp::Zero(out.grassmann_part.rows(), out.grassmann_part.cols());
  return out;
}

}  // namespace susyspec

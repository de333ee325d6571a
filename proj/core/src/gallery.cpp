#include "susyspec/gallery.hpp"

#include <Eigen/SVD>
#include <random>

namespace susyspec {

namespace {

LinearOp pauli_x() {
  LinearOp m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

LinearOp pauli_z() {
  LinearOp m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Left and right multiplication on M_n(C) under column-major vectorization.
LinearOp left_mult(const LinearOp& a) {
  return kronecker(LinearOp(LinearOp::Identity(a.rows(), a.cols())), a);
}
LinearOp right_mult(const LinearOp& a) {
  return kronecker(LinearOp(a.transpose()),
                   LinearOp(LinearOp::Identity(a.rows(), a.cols())));
}

/// vec(xi^*) = P conj(vec xi): the adjoint map as antilinear coefficient.
LinearOp transpose_permutation(Eigen::Index n) {
  LinearOp p = LinearOp::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) p(i + n * j, j + n * i) = 1.0;
  return p;
}

Vector unit_matrix_vec(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  LinearOp m = LinearOp::Zero(n, n);
  m(i, j) = 1.0;
  return vectorize(m);
}

GalleryN1 make_trivial(const Tolerance& tol) {
  GalleryN1 g;
  g.name = "trivial";
  g.description = "scalars on C^2, no one-forms, degenerate extension";
  g.data.algebra = StarAlgebra::generate({LinearOp(LinearOp::Identity(2, 2))}, tol);
  g.data.dirac = pauli_x();
  g.data.grading = pauli_z();
  g.j = AntilinearOp(LinearOp(LinearOp::Identity(2, 2)));
  Vector e1 = Vector::Zero(2), e2 = Vector::Zero(2);
  e1(0) = 1.0;
  e2(1) = 1.0;
  g.generators = {e1, e2};
  return g;
}

/// Functions on two points in the standard bimodule picture: H = M_2(C),
/// diagonal algebra acting by left multiplication, D = L_T + R_T with
/// T = sigma_x, grading x -> g x g, J the adjoint map.
GalleryN1 make_two_point(const Tolerance& tol) {
  GalleryN1 g;
  g.name = "two-point";
  g.description = "two-point space on M2(C), nondegenerate extension";
  LinearOp d1 = LinearOp::Zero(2, 2), d2 = LinearOp::Zero(2, 2);
  d1(0, 0) = 1.0;
  d2(1, 1) = 1.0;
  g.data.algebra = StarAlgebra::generate({left_mult(d1), left_mult(d2)}, tol);
  const LinearOp t = pauli_x(), gr = pauli_z();
  g.data.dirac = left_mult(t) + right_mult(t);
  g.data.grading = left_mult(gr) * right_mult(gr);
  g.j = AntilinearOp(transpose_permutation(2));
  g.generators = {vectorize(LinearOp(LinearOp::Identity(2, 2))), vectorize(pauli_x())};
  return g;
}

/// A noncommutative pair of points: A = M_2(C) (+) C block-diagonal in M_3,
/// H = M_3(C), off-block Dirac. The module presentation needs a genuine
/// projection: each column splits into a rank-2 and a rank-1 cyclic piece.
GalleryN1 make_nc_two_point(const Tolerance& tol) {
  GalleryN1 g;
  g.name = "nc-two-point";
  g.description = "M2(C)+C block algebra on M3(C), projective module, "
                  "perturbed connection";
  auto block = [](const LinearOp& a2, Complex al) {
    LinearOp m = LinearOp::Zero(3, 3);
    m.topLeftCorner(2, 2) = a2;
    m(2, 2) = al;
    return m;
  };
  std::vector<LinearOp> gens;
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      LinearOp e = LinearOp::Zero(2, 2);
      e(i, j) = 1.0;
      gens.push_back(left_mult(block(e, 0)));
    }
  gens.push_back(left_mult(block(LinearOp(LinearOp::Zero(2, 2)), 1)));
  g.data.algebra = StarAlgebra::generate(gens, tol);

  LinearOp t = LinearOp::Zero(3, 3);
  t(0, 2) = 1.0;
  t(2, 0) = 1.0;
  t(1, 2) = 0.5;
  t(2, 1) = 0.5;
  LinearOp gr = LinearOp::Zero(3, 3);
  gr(0, 0) = 1.0;
  gr(1, 1) = 1.0;
  gr(2, 2) = -1.0;
  g.data.dirac = left_mult(t) + right_mult(t);
  g.data.grading = left_mult(gr) * right_mult(gr);
  g.j = AntilinearOp(transpose_permutation(3));

  g.generators = {unit_matrix_vec(3, 0, 0), unit_matrix_vec(3, 2, 0),
                  unit_matrix_vec(3, 0, 1), unit_matrix_vec(3, 2, 1),
                  unit_matrix_vec(3, 0, 2), unit_matrix_vec(3, 2, 2)};
  LinearOp e11 = LinearOp::Zero(2, 2);
  e11(0, 0) = 1.0;
  const LinearOp q_top = left_mult(block(e11, 0));
  const LinearOp q_bot = left_mult(block(LinearOp(LinearOp::Zero(2, 2)), 1));
  const LinearOp zero = LinearOp::Zero(9, 9);
  g.projection.assign(6, std::vector<LinearOp>(6, zero));
  for (size_t j = 0; j < 6; ++j)
    g.projection[j][j] = (j % 2 == 0) ? q_top : q_bot;
  g.perturbed_connection = true;
  return g;
}

GalleryN11 make_n11_trivial(const Tolerance& tol) {
  GalleryN11 g;
  g.name = "n11-trivial";
  g.description = "one-dimensional data with d = 0";
  g.data.algebra = StarAlgebra::generate({LinearOp(LinearOp::Identity(1, 1))}, tol);
  g.data.d_frak = LinearOp::Zero(1, 1);
  g.data.d_bar = LinearOp::Zero(1, 1);
  g.data.grading = LinearOp::Identity(1, 1);
  g.data.hodge = LinearOp::Identity(1, 1);
  return g;
}

GalleryN11 make_n11_minimal(const Tolerance& tol) {
  GalleryN11 g;
  g.name = "n11-minimal";
  g.description = "smallest nondegenerate normalized data, dim 4";
  const LinearOp sx = pauli_x(), sz = pauli_z();
  const LinearOp i2 = LinearOp::Identity(2, 2);
  g.data.algebra = StarAlgebra::generate({LinearOp(LinearOp::Identity(4, 4))}, tol);
  g.data.d_frak = kronecker(sx, sx);
  g.data.d_bar = kronecker(sx, sz);
  g.data.grading = kronecker(sz, i2);
  g.data.hodge = kronecker(i2, sz);
  return g;
}

}  // namespace

std::vector<std::string> gallery_n1_names() {
  return {"trivial", "two-point", "nc-two-point"};
}

std::vector<std::string> gallery_n11_names() { return {"n11-trivial", "n11-minimal"}; }

GalleryN1 gallery_n1(const std::string& name, const Tolerance& tol) {
  if (name == "trivial") return make_trivial(tol);
  if (name == "two-point") return make_two_point(tol);
  if (name == "nc-two-point") return make_nc_two_point(tol);
  throw std::invalid_argument("unknown gallery entry: " + name);
}

GalleryN11 gallery_n11(const std::string& name, const Tolerance& tol) {
  if (name == "n11-trivial") return make_n11_trivial(tol);
  if (name == "n11-minimal") return make_n11_minimal(tol);
  throw std::invalid_argument("unknown gallery entry: " + name);
}

SpectralSetup make_gallery_setup(const GalleryN1& entry, const Tolerance& tol) {
  RealStructure rs = make_real_structure(entry.data, entry.j, tol);
  HermitianModule mod =
      entry.projection.empty()
          ? HermitianModule::free(entry.data, entry.generators, tol)
          : HermitianModule::projective(entry.data, entry.generators, entry.projection,
                                        tol);
  return make_setup(entry.data, std::move(rs), std::move(mod), tol);
}

LinearOp selfadjoint_perturbation_basis(const SpectralSetup& s, const Connection& base) {
  const LinearOp even = module_map_basis(s, /*gamma_even=*/true);
  const Eigen::Index q = s.oe.space.dim();
  const Eigen::Index m = s.e_dim();
  const Eigen::Index k = even.cols();
  if (k == 0) return even;

  const PsiMap psi = flip_psi(s);
  const Contractions ct = contractions(s);
  auto defect = [&](const Connection& c) -> Vector {
    LinearOp nb = right_connection(s, c, psi);
    TensoredConnection nt = tensored_connection(s, c, nb);
    LinearOp d = ct.c * nt.matrix;
    LinearOp db = ct.cbar * nt.matrix;
    Vector v(2 * d.size());
    v << vectorize(LinearOp(d - d.adjoint())), vectorize(LinearOp(db - db.adjoint()));
    return v;
  };
  const Vector base_defect = defect(base);

  // real-linear system over (Re, Im) coefficients of the even basis
  RealMatrix sys(2 * base_defect.size(), 2 * k);
  for (Eigen::Index col = 0; col < 2 * k; ++col) {
    Vector co = Vector::Zero(k);
    co(col % k) = (col < k) ? Complex(1, 0) : Complex(0, 1);
    Connection c = perturbed(base, unvectorize(Vector(even * co), q, m));
    Vector d = defect(c) - base_defect;
    sys.col(col).head(base_defect.size()) = d.real();
    sys.col(col).tail(base_defect.size()) = d.imag();
  }
  Eigen::BDCSVD<RealMatrix> svd(sys, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > s.tol.rank_tol * std::max(scale, 1.0)) ++rank;
  RealMatrix kernel = svd.matrixV().rightCols(2 * k - rank);

  LinearOp out(q * m, kernel.cols());
  for (Eigen::Index col = 0; col < kernel.cols(); ++col) {
    Vector co(k);
    for (Eigen::Index j = 0; j < k; ++j)
      co(j) = Complex(kernel(j, col), kernel(k + j, col));
    out.col(col) = even * co;
  }
  return out;
}

Connection gallery_connection(const GalleryN1& entry, const SpectralSetup& s) {
  Connection c = grassmann(s);
  if (!entry.perturbed_connection) return c;
  LinearOp basis = selfadjoint_perturbation_basis(s, c);
  if (basis.cols() == 0) return c;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector co(basis.cols());
  for (Eigen::Index j = 0; j < co.size(); ++j) co(j) = dist(rng);
  Vector v = basis * co;
  v *= 1.0 / v.norm();
  return perturbed(c, unvectorize(v, s.oe.space.dim(), s.e_dim()));
}

ExtensionPipeline make_gallery_pipeline(const std::string& name, const Tolerance& tol,
                                        HodgeChoice hodge) {
  GalleryN1 entry = gallery_n1(name, tol);
  ExtensionPipeline p;
  p.setup = make_gallery_setup(entry, tol);
  p.connection = gallery_connection(entry, p.setup);
  p.phi = phi(p.setup, p.connection, hodge);
  return p;
}

}  // namespace susyspec

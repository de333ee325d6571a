#include "susyspec/modules.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace susyspec {

namespace {

struct KernelSplit {
  LinearOp kernel;  // orthonormal basis, eigenvalues below cutoff
  LinearOp range;   // the rest
};

KernelSplit split_common_range(const std::vector<LinearOp>& ops, Eigen::Index ambient,
                               const Tolerance& tol) {
  if (ambient == 0)
    return {LinearOp(0, 0), LinearOp(0, 0)};
  LinearOp k = LinearOp::Zero(ambient, ambient);
  for (const auto& m : ops) k += m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<LinearOp> es(k);
  const auto& w = es.eigenvalues();
  const double scale = std::max(w.size() ? w(w.size() - 1) : 0.0, 1.0);
  Eigen::Index dim = 0;
  while (dim < w.size() && w(dim) <= tol.rank_tol * scale) ++dim;
  KernelSplit out;
  out.kernel = es.eigenvectors().leftCols(dim);
  out.range = es.eigenvectors().rightCols(ambient - dim);
  return out;
}

}  // namespace

void HermitianModule::finish(const Tolerance& tol) {
  tol_ = tol;
  const Eigen::Index dim = hilbert_dim_;
  const Eigen::Index da = algebra_.dim();
  const Eigen::Index n = n_generators();

  LinearOp iota_full(dim, n * da);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < da; ++k)
      iota_full.col(j * da + k) =
          algebra_.basis_op(k) * generators_[static_cast<size_t>(j)];

  LinearOp coord_basis;
  if (free_) {
    coord_basis = LinearOp::Identity(n * da, n * da);
  } else {
    // (xi p)_j = sum_i xi_i p_ij: block (j,i) is right multiplication by p_ij
    LinearOp p_coord = LinearOp::Zero(n * da, n * da);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const LinearOp& pij = p_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (Eigen::Index k = 0; k < da; ++k) {
          auto mem = algebra_.membership(LinearOp(algebra_.basis_op(k) * pij));
          if (!mem.accepted)
            throw std::invalid_argument("HermitianModule: p entry leaves the algebra");
          p_coord.col(i * da + k).segment(j * da, da) = mem.element.coeffs;
        }
      }
    }
    coord_basis = span_closure(p_coord, tol).basis();
  }

  iota_ = iota_full * coord_basis;
  Eigen::CompleteOrthogonalDecomposition<LinearOp> cod(iota_);
  if (cod.rank() != iota_.cols())
    throw std::invalid_argument(
        "HermitianModule: presentation not injective on p A^n, choose fewer or "
        "independent generators");
  iota_pinv_ = cod.pseudoInverse() * 1.0;
  iota_pinv_ = coord_basis * iota_pinv_;  // full-coordinate pseudo inverse

  Subspace image = span_closure(iota_, tol);
  if (image.dim() == dim)
    embed_ = LinearOp::Identity(dim, dim);
  else
    embed_ = image.basis();

  rows_.clear();
  for (Eigen::Index j = 0; j < n; ++j) {
    Vector row = Vector::Zero(dim);
    for (Eigen::Index k = 0; k < n; ++k) {
      const LinearOp& pjk = free_ ? LinearOp() : p_[static_cast<size_t>(j)][static_cast<size_t>(k)];
      if (free_) {
        if (k == j) row += generators_[static_cast<size_t>(j)];
      } else {
        row += pjk * generators_[static_cast<size_t>(k)];
      }
    }
    rows_.push_back(row);
  }
}

HermitianModule HermitianModule::free(const N1Data& data, std::vector<Vector> generators,
                                      const Tolerance& tol) {
  HermitianModule m;
  m.algebra_ = data.algebra;
  m.hilbert_dim_ = data.hilbert_dim();
  m.generators_ = std::move(generators);
  m.free_ = true;
  m.finish(tol);
  return m;
}

HermitianModule HermitianModule::projective(const N1Data& data,
                                            std::vector<Vector> generators,
                                            std::vector<std::vector<LinearOp>> p,
                                            const Tolerance& tol) {
  HermitianModule m;
  m.algebra_ = data.algebra;
  m.hilbert_dim_ = data.hilbert_dim();
  m.generators_ = std::move(generators);
  m.p_ = std::move(p);
  m.free_ = false;
  if (m.p_.size() != m.generators_.size())
    throw std::invalid_argument("HermitianModule: p must be n x n");
  for (const auto& row : m.p_)
    if (row.size() != m.generators_.size())
      throw std::invalid_argument("HermitianModule: p must be n x n");
  m.finish(tol);
  return m;
}

bool HermitianModule::spans_hilbert_space(const Tolerance&) const {
  return dim() == hilbert_dim_;
}

std::vector<LinearOp> HermitianModule::coordinates(const Vector& xi) const {
  const Eigen::Index da = algebra_.dim();
  Vector c = iota_pinv_ * xi;
  std::vector<LinearOp> out;
  for (Eigen::Index j = 0; j < n_generators(); ++j)
    out.push_back(algebra_.realize(c.segment(j * da, da)));
  return out;
}

LinearOp HermitianModule::inner_product_A(const Vector& xi, const Vector& eta) const {
  auto cx = coordinates(xi);
  auto cy = coordinates(eta);
  const Eigen::Index dim = hilbert_dim_;
  LinearOp out = LinearOp::Zero(dim, dim);
  for (Eigen::Index j = 0; j < n_generators(); ++j)
    out += cx[static_cast<size_t>(j)] * cy[static_cast<size_t>(j)].adjoint();
  return out;
}

LinearOp HermitianModule::inner_product_A_twisted(const Vector& xi, const Vector& eta,
                                                  const RealStructure& rs) const {
  return inner_product_A(rs.j.apply(xi), rs.j.apply(eta));
}

double HermitianModule::projection_residual() const {
  if (free_) return 0.0;
  const Eigen::Index n = n_generators();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& pij = p_[static_cast<size_t>(i)][static_cast<size_t>(j)];
      LinearOp sq = LinearOp::Zero(pij.rows(), pij.cols());
      for (Eigen::Index k = 0; k < n; ++k)
        sq += p_[static_cast<size_t>(i)][static_cast<size_t>(k)] *
              p_[static_cast<size_t>(k)][static_cast<size_t>(j)];
      worst = std::max(worst, operator_norm(LinearOp(sq - pij)));
      worst = std::max(worst, operator_norm(LinearOp(
                                  p_[static_cast<size_t>(j)][static_cast<size_t>(i)].adjoint() - pij)));
    }
  }
  return worst;
}

double HermitianModule::positivity_residual() const {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < dim(); ++k) {
    LinearOp f = inner_product_A(embed_.col(k), embed_.col(k));
    Eigen::SelfAdjointEigenSolver<LinearOp> es(f);
    const double lo = es.eigenvalues().size() ? es.eigenvalues()(0) : 0.0;
    worst = std::max(worst, std::max(0.0, -lo));
  }
  return worst;
}

double HermitianModule::left_linearity_residual() const {
  double worst = 0.0;
  for (const auto& a : algebra_.basis()) {
    for (Eigen::Index i = 0; i < dim(); ++i) {
      Vector axi = a * embed_.col(i);
      for (Eigen::Index j = 0; j < dim(); ++j) {
        LinearOp lhs = inner_product_A(axi, embed_.col(j));
        LinearOp rhs = a * inner_product_A(embed_.col(i), embed_.col(j));
        worst = std::max(worst, operator_norm(LinearOp(lhs - rhs)));
      }
    }
  }
  return worst;
}

double HermitianModule::stability_residual(const RealStructure& rs,
                                           const LinearOp& grading) const {
  if (spans_hilbert_space(tol_)) return 0.0;
  Subspace e(embed_, hilbert_dim_, tol_.rank_tol);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < dim(); ++k) {
    worst = std::max(worst, e.residual(rs.j.apply(embed_.col(k))));
    worst = std::max(worst, e.residual(Vector(grading * embed_.col(k))));
  }
  return worst;
}

LinearOp HermitianModule::p_entry(Eigen::Index i, Eigen::Index j) const {
  const Eigen::Index h = hilbert_dim_;
  if (free_)
    return i == j ? LinearOp(LinearOp::Identity(h, h)) : LinearOp(LinearOp::Zero(h, h));
  return p_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

ActionSpace module_action_space(const HermitianModule& e, const RealStructure& rs) {
  ActionSpace s;
  s.dim = e.dim();
  const LinearOp& b = e.embedding();
  for (const auto& a : e.algebra().basis()) {
    s.left.push_back(b.adjoint() * a * b);
    s.right.push_back(b.adjoint() * rs.right_action(a) * b);
  }
  return s;
}

ActionSpace forms_action_space(const OneForms& forms, const N1Data& data) {
  ActionSpace s;
  s.dim = forms.dim();
  for (const auto& a : data.algebra.basis()) {
    s.left.push_back(forms.left_mult(a));
    s.right.push_back(forms.right_mult(a));
  }
  return s;
}

LinearOp QuotientSpace::descend(const LinearOp& ambient_map,
                                const QuotientSpace& target) const {
  return target.coord_map_ * (ambient_map * section_);
}

double QuotientSpace::well_definedness(const LinearOp& ambient_map,
                                       const QuotientSpace& target) const {
  return well_definedness_of_coords(LinearOp(target.coord_map_ * ambient_map));
}

double QuotientSpace::well_definedness_of_coords(const LinearOp& coords_level_map) const {
  if (relation_dim_ == 0) return 0.0;
  // restriction to the relation space = X - (X B0) B0^dag with B0 the
  // orthonormal relation complement
  LinearOp x = coords_level_map;
  return operator_norm(LinearOp(x - (x * std_section_) * std_section_.adjoint()));
}

QuotientSpace QuotientSpace::plain(Eigen::Index ambient,
                                   const std::vector<LinearOp>& relation_ops,
                                   const Tolerance& tol) {
  QuotientSpace q;
  q.ambient_ = ambient;
  if (relation_ops.empty()) {
    q.section_ = LinearOp::Identity(ambient, ambient);
    q.coord_map_ = q.section_;
    q.std_section_ = q.section_;
    return q;
  }
  KernelSplit ks = split_common_range(relation_ops, ambient, tol);
  q.section_ = ks.kernel;
  q.coord_map_ = ks.kernel.adjoint();
  q.std_section_ = ks.kernel;
  q.relation_dim_ = ks.range.cols();
  return q;
}

QuotientSpace QuotientSpace::with_gram(Eigen::Index ambient,
                                       const std::vector<LinearOp>& relation_ops,
                                       const LinearOp& gram, const Tolerance& tol) {
  QuotientSpace q = plain(ambient, relation_ops, tol);
  q.has_gram_ = true;
  q.gram_ = gram;
  if (q.section_.cols() == 0) return q;
  LinearOp gq = q.section_.adjoint() * gram * q.section_;
  gq = 0.5 * (gq + gq.adjoint());
  Eigen::SelfAdjointEigenSolver<LinearOp> es(gq);
  const auto& w = es.eigenvalues();
  const double scale = std::max(w.size() ? std::abs(w(w.size() - 1)) : 0.0, 1.0);
  Eigen::Index null_dim = 0;
  while (null_dim < w.size() && w(null_dim) <= tol.rank_tol * scale) ++null_dim;
  q.extra_kernel_ = null_dim;
  const Eigen::Index keep = w.size() - null_dim;
  LinearOp u = es.eigenvectors().rightCols(keep);
  Vector scales(keep);
  for (Eigen::Index k = 0; k < keep; ++k)
    scales(k) = 1.0 / std::sqrt(w(null_dim + k));
  q.section_ = q.section_ * u * scales.asDiagonal();
  q.coord_map_ = q.section_.adjoint() * gram;
  return q;
}

QuotientSpace QuotientSpace::staged(const QuotientSpace& left_pair,
                                    Eigen::Index right_dim,
                                    const QuotientSpace& stage_two) {
  if (stage_two.ambient_dim() != left_pair.dim() * right_dim)
    throw std::invalid_argument("QuotientSpace::staged: stage mismatch");
  QuotientSpace q;
  q.ambient_ = left_pair.ambient_dim() * right_dim;
  const LinearOp lift1 =
      kronecker(left_pair.std_section(), LinearOp::Identity(right_dim, right_dim));
  q.section_ = lift1 * stage_two.section();
  q.std_section_ = lift1 * stage_two.std_section();
  q.coord_map_ = q.section_.adjoint();
  q.relation_dim_ = q.ambient_ - q.section_.cols();
  return q;
}

BalancedPair balanced_tensor(const ActionSpace& x, const ActionSpace& y,
                             const Tolerance& tol) {
  if (x.right.size() != y.left.size())
    throw std::invalid_argument("balanced_tensor: incompatible action lists");
  const Eigen::Index ambient = x.dim * y.dim;
  const LinearOp ix = LinearOp::Identity(x.dim, x.dim);
  const LinearOp iy = LinearOp::Identity(y.dim, y.dim);
  std::vector<LinearOp> rels;
  for (size_t a = 0; a < x.right.size(); ++a)
    rels.push_back(kronecker(x.right[a], iy) - kronecker(ix, y.left[a]));
  BalancedPair out;
  out.space = QuotientSpace::plain(ambient, rels, tol);
  out.induced.dim = out.space.dim();
  for (size_t a = 0; a < x.left.size(); ++a) {
    out.induced.left.push_back(
        out.space.descend(kronecker(x.left[a], iy), out.space));
    out.induced.right.push_back(
        out.space.descend(kronecker(ix, y.right[a]), out.space));
  }
  return out;
}

BalancedEE balanced_e_tensor_e(const HermitianModule& e, const RealStructure& rs,
                               const Tolerance& tol) {
  ActionSpace es = module_action_space(e, rs);
  const Eigen::Index m = e.dim();
  const Eigen::Index ambient = m * m;
  const LinearOp im = LinearOp::Identity(m, m);
  std::vector<LinearOp> rels;
  for (size_t a = 0; a < es.right.size(); ++a)
    rels.push_back(kronecker(es.right[a], im) - kronecker(im, es.left[a]));

  BalancedEE out;
  out.gram = LinearOp::Zero(ambient, ambient);
  const LinearOp& b = e.embedding();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index k = 0; k < m; ++k) {
      LinearOp f = e.inner_product_A_twisted(b.col(i), b.col(k), rs);
      LinearOp block = b.adjoint() * f * b;  // <e_j, f e_l> over embedded basis
      for (Eigen::Index j = 0; j < m; ++j)
        for (Eigen::Index l = 0; l < m; ++l)
          out.gram(i * m + j, k * m + l) = block(j, l);
    }
  }

  QuotientSpace probe = QuotientSpace::plain(ambient, rels, tol);
  if (probe.relation_dim() > 0) {
    const LinearOp& b0 = probe.std_section();
    out.descent_residual =
        operator_norm(LinearOp(out.gram - (out.gram * b0) * b0.adjoint()));
  }

  LinearOp gq = probe.section().adjoint() * out.gram * probe.section();
  gq = 0.5 * (gq + gq.adjoint());
  Eigen::SelfAdjointEigenSolver<LinearOp> esolve(gq);
  const double lo = esolve.eigenvalues().size() ? esolve.eigenvalues()(0) : 0.0;
  out.psd_residual = std::max(0.0, -lo);
  if (out.psd_residual > tol.eq_tol)
    throw std::runtime_error("balanced_e_tensor_e: inner product not PSD, Hermitian "
                             "structure is broken");

  out.space = QuotientSpace::with_gram(ambient, rels, out.gram, tol);
  return out;
}

ProductHermitian canonical_product_hermitian(const N1Data& product,
                                             const HermitianModule& e1,
                                             const HermitianModule& e2,
                                             const Tolerance& tol) {
  const Eigen::Index n1 = e1.n_generators(), n2 = e2.n_generators();
  std::vector<Vector> gens;
  gens.reserve(static_cast<size_t>(n1 * n2));
  for (Eigen::Index i = 0; i < n1; ++i)
    for (Eigen::Index j = 0; j < n2; ++j)
      gens.push_back(kron_vec(e1.generator(i), e2.generator(j)));

  ProductHermitian out;
  if (e1.is_free() && e2.is_free()) {
    out.module = HermitianModule::free(product, std::move(gens), tol);
  } else {
    std::vector<std::vector<LinearOp>> p(static_cast<size_t>(n1 * n2),
                                         std::vector<LinearOp>(static_cast<size_t>(n1 * n2)));
    for (Eigen::Index i1 = 0; i1 < n1; ++i1)
      for (Eigen::Index i2 = 0; i2 < n2; ++i2)
        for (Eigen::Index j1 = 0; j1 < n1; ++j1)
          for (Eigen::Index j2 = 0; j2 < n2; ++j2)
            p[static_cast<size_t>(i1 * n2 + i2)][static_cast<size_t>(j1 * n2 + j2)] =
                kronecker(e1.p_entry(i1, j1), e2.p_entry(i2, j2));
    out.module = HermitianModule::projective(product, std::move(gens), std::move(p), tol);
  }

  // factorization identity on embedded basis samples
  double worst = 0.0;
  const Eigen::Index m1 = e1.dim(), m2 = e2.dim();
  const Eigen::Index s1 = std::min<Eigen::Index>(m1, 3), s2 = std::min<Eigen::Index>(m2, 3);
  for (Eigen::Index i = 0; i < s1; ++i)
    for (Eigen::Index j = 0; j < s2; ++j)
      for (Eigen::Index k = 0; k < s1; ++k)
        for (Eigen::Index l = 0; l < s2; ++l) {
          Vector x = kron_vec(e1.embedding().col(i), e2.embedding().col(j));
          Vector y = kron_vec(e1.embedding().col(k), e2.embedding().col(l));
          LinearOp lhs = out.module.inner_product_A(x, y);
          LinearOp rhs =
              kronecker(e1.inner_product_A(e1.embedding().col(i), e1.embedding().col(k)),
                        e2.inner_product_A(e2.embedding().col(j), e2.embedding().col(l)));
          worst = std::max(worst, operator_norm(LinearOp(lhs - rhs)));
        }
  out.factorization_residual = worst;
  return out;
}

}  // namespace susyspec

#include <doctest.h>

#include "helpers.hpp"
#include "susyspec/gallery.hpp"
#include "susyspec/modules.hpp"

using namespace susyspec;
using namespace susyspec::testing;

TEST_CASE("one-forms of the two-point space") {
  Tolerance tol;
  GalleryN1 g = gallery_n1("two-point", tol);
  OneForms forms(g.data, tol);

  // brute-force oracle: span of a_i [D, a_j] over the full algebra basis,
  // rank by local elimination
  std::vector<Vector> products;
  for (const auto& a : g.data.algebra.basis())
    for (const auto& b : g.data.algebra.basis())
      products.push_back(vectorize(LinearOp(a * commutator(g.data.dirac, b))));
  CHECK(elimination_rank_of_vectors(products, 1e-9) == 2);
  CHECK(forms.dim() == 2);

  SUBCASE("the differential kills the identity") {
    auto d1 = forms.dirac_d(LinearOp(LinearOp::Identity(4, 4)));
    CHECK(d1.coeffs.norm() < 1e-12);
    CHECK(d1.residual < 1e-12);
  }

  SUBCASE("star convention (da)^* = -d(a^*)") {
    CHECK(forms.star_convention_residual(g.data) < 1e-12);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int t = 0; t < 8; ++t) {
      Vector c(g.data.algebra.dim());
      for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = Complex(dist(rng), dist(rng));
      LinearOp a = g.data.algebra.realize(c);
      LinearOp da = commutator(g.data.dirac, a);
      LinearOp dastar = commutator(g.data.dirac, LinearOp(a.adjoint()));
      CHECK(operator_norm(LinearOp(da.adjoint() + dastar)) < 1e-10);
    }
  }

  SUBCASE("bimodule closure") {
    for (const auto& a : g.data.algebra.basis()) {
      double r = 0.0;
      forms.left_mult(a, &r);
      CHECK(r < tol.eq_tol);
      forms.right_mult(a, &r);
      CHECK(r < tol.eq_tol);
    }
  }
}

TEST_CASE("bimodule actions") {
  Tolerance tol;
  GalleryN1 g = gallery_n1("two-point", tol);
  RealStructure rs = make_real_structure(g.data, g.j, tol);
  OneForms forms(g.data, tol);
  BimoduleActions acts = bimodule_actions(g.data, rs, forms, tol);
  CHECK(acts.left_right_commute_residual < tol.eq_tol);

  SUBCASE("identity acts trivially on the right") {
    CHECK(operator_norm(LinearOp(rs.right_action(LinearOp(LinearOp::Identity(4, 4))) -
                                 LinearOp::Identity(4, 4))) < 1e-12);
  }

  SUBCASE("left and right actions associate on samples") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 6; ++t) {
      Vector xi = random_vector(rng, 4);
      const LinearOp& a = g.data.algebra.basis_op(0);
      const LinearOp& b = g.data.algebra.basis_op(1);
      Vector lhs = rs.right_action(b) * (a * xi);
      Vector rhs = a * (rs.right_action(b) * xi);
      CHECK((lhs - rhs).norm() < 1e-12);
    }
  }

  SUBCASE("right form action respects multiplication") {
    // (xi . w) . a = xi . (w a)
    for (const auto& w : forms.basis())
      for (const auto& a : g.data.algebra.basis()) {
        LinearOp lhs = rs.right_action(a) * rs.right_action(w);
        LinearOp rhs = rs.right_action(LinearOp(w * a));
        CHECK(operator_norm(LinearOp(lhs - rhs)) < 1e-10);
      }
  }

  SUBCASE("first-order violation is rejected") {
    // the 2-dim two-point data with plain conjugation violates first order
    LinearOp p(2, 2);
    p << 1, 0, 0, 0;
    N1Data bad;
    bad.algebra = StarAlgebra::generate({p}, tol);
    bad.dirac = sigma_x();
    bad.grading = sigma_z();
    RealStructure badrs =
        make_real_structure(bad, AntilinearOp(LinearOp(LinearOp::Identity(2, 2))), tol);
    OneForms badforms(bad, tol);
    CHECK_THROWS_AS(bimodule_actions(bad, badrs, badforms, tol), std::invalid_argument);
  }
}

TEST_CASE("product one-forms decompose") {
  Tolerance tol;
  GalleryN1 g = gallery_n1("two-point", tol);
  N1Data prod = kasparov_product(g.data, g.data, tol);
  ProductOneForms pof = product_one_forms(g.data, g.data, prod, tol);

  // brute-force oracle for the product one-form dimension
  std::vector<Vector> span;
  for (const auto& a : prod.algebra.basis())
    for (const auto& b : prod.algebra.basis())
      span.push_back(vectorize(LinearOp(a * commutator(prod.dirac, b))));
  CHECK(elimination_rank_of_vectors(span, 1e-9) == 8);

  CHECK(pof.product.dim() == 8);
  CHECK(pof.summand_one.dim() == 4);
  CHECK(pof.summand_two.dim() == 4);
  CHECK(pof.overlap < tol.eq_tol);            // the sum is direct
  CHECK(pof.equality_residual < tol.eq_tol);  // and exhausts the product forms
  CHECK(pof.differential_residual < tol.eq_tol);
  CHECK(pof.leibniz_residual < tol.eq_tol);

  SUBCASE("the differential kills the unit") {
    auto d1 = pof.product.dirac_d(LinearOp(LinearOp::Identity(16, 16)));
    CHECK(d1.coeffs.norm() < 1e-12);
  }
}

TEST_CASE("hermitian modules") {
  Tolerance tol;

  SUBCASE("free two-point module") {
    GalleryN1 g = gallery_n1("two-point", tol);
    RealStructure rs = make_real_structure(g.data, g.j, tol);
    HermitianModule e = HermitianModule::free(g.data, g.generators, tol);
    CHECK(e.dim() == 4);
    CHECK(e.is_free());
    CHECK(e.projection_residual() == 0.0);
    CHECK(e.positivity_residual() < tol.eq_tol);
    CHECK(e.left_linearity_residual() < tol.eq_tol);
    CHECK(e.stability_residual(rs, g.data.grading) < tol.eq_tol);
  }

  SUBCASE("projective presentation of the noncommutative pair") {
    GalleryN1 g = gallery_n1("nc-two-point", tol);
    RealStructure rs = make_real_structure(g.data, g.j, tol);
    HermitianModule e =
        HermitianModule::projective(g.data, g.generators, g.projection, tol);
    CHECK(e.dim() == 9);
    CHECK_FALSE(e.is_free());
    CHECK(e.projection_residual() < tol.eq_tol);
    CHECK(e.positivity_residual() < tol.eq_tol);
    CHECK(e.left_linearity_residual() < tol.eq_tol);
    CHECK(e.stability_residual(rs, g.data.grading) < tol.eq_tol);
  }
}

TEST_CASE("balanced tensor dimensions") {
  Tolerance tol;

  SUBCASE("scalars balance nothing") {
    // A = C acting on E = C^3: relations vanish, dimension is 9
    ActionSpace e;
    e.dim = 3;
    e.left = {LinearOp::Identity(3, 3)};
    e.right = {LinearOp::Identity(3, 3)};
    auto bp = balanced_tensor(e, e, tol);
    CHECK(bp.space.dim() == 9);
    CHECK(bp.space.relation_dim() == 0);
  }

  SUBCASE("a free rank one module collapses to the algebra") {
    // E = A for the diagonal algebra acting on itself by multiplication
    LinearOp p(2, 2);
    p << 1, 0, 0, 0;
    auto alg = StarAlgebra::generate({p}, tol);
    ActionSpace e;
    e.dim = 2;
    for (const auto& a : alg.basis()) {
      e.left.push_back(a);
      e.right.push_back(a);  // commutative: x.a = a x
    }
    auto bp = balanced_tensor(e, e, tol);
    CHECK(bp.space.dim() == 2);  // dim(E ox_A E) = dim A

    // independent oracle: explicit enumeration of the balancing relations
    std::vector<Vector> rels;
    for (const auto& a : alg.basis())
      for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) {
          Vector ei = Vector::Zero(2), ej = Vector::Zero(2);
          ei(i) = 1;
          ej(j) = 1;
          rels.push_back(kron_vec(Vector(a * ei), ej) - kron_vec(ei, Vector(a * ej)));
        }
    CHECK(4 - elimination_rank_of_vectors(rels, 1e-9) == 2);
  }
}

TEST_CASE("the balanced inner product model") {
  Tolerance tol;
  GalleryN1 g = gallery_n1("two-point", tol);
  RealStructure rs = make_real_structure(g.data, g.j, tol);
  HermitianModule e = HermitianModule::free(g.data, g.generators, tol);
  BalancedEE ee = balanced_e_tensor_e(e, rs, tol);

  CHECK(ee.space.dim() == 8);
  CHECK(ee.descent_residual < tol.eq_tol);  // the form kills the relations
  CHECK(ee.psd_residual == 0.0);
  CHECK(ee.space.extra_kernel() == 0);

  SUBCASE("the form is independent of the representative") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 6; ++t) {
      Vector c = random_vector(rng, ee.space.dim());
      Vector rep = ee.space.lift(c);
      // shift the representative by a relation vector
      Vector shift = Vector::Zero(16);
      const LinearOp& b0 = ee.space.std_section();
      Vector noise = random_vector(rng, 16);
      shift = noise - b0 * (b0.adjoint() * noise);
      Vector moved = rep + shift;
      Complex lhs = inner(Vector(ee.gram * rep), rep);
      Complex rhs = inner(Vector(ee.gram * moved), moved);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }

  SUBCASE("lemma: the product model factorizes dimensionally") {
    N1Data prod = kasparov_product(g.data, g.data, tol);
    RealStructure rsp = tensor_real_structure(prod, rs, rs, tol);
    auto ph = canonical_product_hermitian(prod, e, e, tol);
    BalancedEE eep = balanced_e_tensor_e(ph.module, rsp, tol);
    CHECK(eep.space.dim() == ee.space.dim() * ee.space.dim());
  }
}

TEST_CASE("canonical product hermitian structure") {
  Tolerance tol;
  GalleryN1 g = gallery_n1("two-point", tol);
  RealStructure rs = make_real_structure(g.data, g.j, tol);
  HermitianModule e = HermitianModule::free(g.data, g.generators, tol);
  N1Data prod = kasparov_product(g.data, g.data, tol);
  auto ph = canonical_product_hermitian(prod, e, e, tol);

  CHECK(ph.module.is_free());
  CHECK(ph.module.n_generators() == 4);  // free ox free stays free of product rank
  CHECK(ph.module.dim() == 16);
  CHECK(ph.factorization_residual < tol.eq_tol);

  SUBCASE("projective times free keeps a projection") {
    GalleryN1 nc = gallery_n1("nc-two-point", tol);
    HermitianModule e2 =
        HermitianModule::projective(nc.data, nc.generators, nc.projection, tol);
    N1Data prod2 = kasparov_product(nc.data, g.data, tol);
    auto ph2 = canonical_product_hermitian(prod2, e2, e, tol);
    CHECK_FALSE(ph2.module.is_free());
    CHECK(ph2.module.dim() == 36);
    CHECK(ph2.module.projection_residual() < tol.eq_tol);
    CHECK(ph2.factorization_residual < tol.eq_tol);
  }
}

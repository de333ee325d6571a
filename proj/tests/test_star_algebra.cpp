#include <doctest.h>

#include "helpers.hpp"
#include "susyspec/star_algebra.hpp"

using namespace susyspec;
using namespace susyspec::testing;

TEST_CASE("generate from the identity") {
  Tolerance tol;
  auto a = StarAlgebra::generate({LinearOp(LinearOp::Identity(2, 2))}, tol);
  CHECK(a.dim() == 1);
  CHECK(a.contains_identity());
  CHECK_FALSE(a.is_full_matrix_algebra());
}

TEST_CASE("generate the diagonal algebra") {
  Tolerance tol;
  LinearOp p(2, 2);
  p << 1, 0, 0, 0;
  auto a = StarAlgebra::generate({p}, tol);
  CHECK(a.dim() == 2);  // closure stabilizes after one step
  LinearOp d(2, 2);
  d << Complex(2, 1), 0, 0, Complex(-1, 3);
  CHECK(a.membership(d).accepted);
  CHECK_FALSE(a.membership(sigma_x()).accepted);
}

TEST_CASE("a single matrix unit generates everything") {
  Tolerance tol;
  LinearOp e12(2, 2);
  e12 << 0, 1, 0, 0;
  auto a = StarAlgebra::generate({e12}, tol);
  CHECK(a.dim() == 4);
  CHECK(a.is_full_matrix_algebra());
}

TEST_CASE("tensor dimensions multiply") {
  Tolerance tol;
  auto scalars = StarAlgebra::generate({LinearOp(LinearOp::Identity(2, 2))}, tol);
  LinearOp p(2, 2);
  p << 1, 0, 0, 0;
  auto diag = StarAlgebra::generate({p}, tol);
  LinearOp e12(2, 2);
  e12 << 0, 1, 0, 0;
  auto full = StarAlgebra::generate({e12}, tol);

  CHECK(StarAlgebra::tensor(scalars, diag, tol).dim() == 2);
  CHECK(StarAlgebra::tensor(diag, diag, tol).dim() == 4);
  CHECK(StarAlgebra::tensor(full, full, tol).dim() == 16);  // matrix-unit count
}

TEST_CASE("tensor contains both embedded factors") {
  Tolerance tol;
  LinearOp p(2, 2);
  p << 1, 0, 0, 0;
  auto diag = StarAlgebra::generate({p}, tol);
  auto prod = StarAlgebra::tensor(diag, diag, tol);
  const LinearOp i2 = LinearOp::Identity(2, 2);
  for (const auto& x : diag.basis()) {
    CHECK(prod.membership(kronecker(x, i2)).accepted);
    CHECK(prod.membership(kronecker(i2, x)).accepted);
  }
}

TEST_CASE("membership coefficients") {
  Tolerance tol;
  LinearOp p(2, 2);
  p << 1, 0, 0, 0;
  auto a = StarAlgebra::generate({p}, tol);

  auto mid = a.membership(LinearOp(LinearOp::Identity(2, 2)));
  CHECK(mid.accepted);
  CHECK(operator_norm(LinearOp(a.realize(mid.element.coeffs) -
                               LinearOp::Identity(2, 2))) < 1e-12);

  // a basis element resolves to a unit coefficient vector
  auto munit = a.membership(a.basis_op(1));
  CHECK(munit.accepted);
  Vector expected = Vector::Zero(a.dim());
  expected(1) = 1.0;
  CHECK((munit.element.coeffs - expected).norm() < 1e-12);

  // the two-point grading lies in the diagonal algebra
  CHECK(a.membership(sigma_z()).accepted);
}

TEST_CASE("generate is idempotent") {
  Tolerance tol;
  LinearOp e12(2, 2);
  e12 << 0, 1, 0, 0;
  auto a = StarAlgebra::generate({e12}, tol);
  auto again = StarAlgebra::generate(a.basis(), tol);
  CHECK(again.dim() == a.dim());
  for (const auto& x : a.basis()) CHECK(again.membership(x).accepted);
}

TEST_CASE("structural residuals and faithfulness") {
  Tolerance tol;
  LinearOp p(2, 2);
  p << 1, 0, 0, 0;
  for (const auto& alg :
       {StarAlgebra::generate({p}, tol),
        StarAlgebra::generate({LinearOp(sigma_x() + Complex(0, 1) * sigma_y())}, tol)}) {
    CHECK(alg.identity_residual() < tol.eq_tol);
    CHECK(alg.adjoint_closure_residual() < tol.eq_tol);
    CHECK(alg.product_closure_residual() < tol.eq_tol);
    CHECK(alg.faithful());
  }
}

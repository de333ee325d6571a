#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "susyspec/example_spec.hpp"
#include "susyspec/gallery.hpp"

using namespace susyspec;
using namespace susyspec::testing;

TEST_CASE("report documents are deterministic") {
  ReportDocument doc;
  doc.command = "verify-n1";
  doc.input_descriptor = "gallery:two-point";
  doc.tol = Tolerance();
  doc.seed = 42;
  doc.checks.measured("Def2.1(2)", "dirac-self-adjoint", 1.25e-14, 1e-10);
  doc.checks.trivially_true("Def2.1(2b)", "heat-trace-summable-finite-dim");
  doc.checks.boolean("KO-table", "sign-table-consistent", true);
  const std::string a = doc.to_string();
  const std::string b = doc.to_string();
  CHECK(a == b);
  CHECK(a.find("residual=1.25") != std::string::npos);
  CHECK(a.find("residual=trivial") != std::string::npos);
  CHECK(a.find("summary checks=3 pass=3 fail=0 verdict=pass") != std::string::npos);
}

TEST_CASE("report verdict matches threshold comparison") {
  CheckReport r;
  r.measured("X", "close", 5e-11, 1e-10);
  r.measured("X", "far", 2e-10, 1e-10);
  CHECK(r.entries[0].pass);
  CHECK_FALSE(r.entries[1].pass);
  CHECK_FALSE(r.passed());
}

TEST_CASE("example files round-trip byte for byte") {
  Tolerance tol;
  GalleryN11 g = gallery_n11("n11-minimal", tol);
  ExampleSpec spec = spec_from_n11(g.data, "round-trip");
  const std::string text = write_example_spec(spec);
  std::istringstream in(text);
  ExampleSpec back = parse_example_spec(in);
  CHECK(write_example_spec(back) == text);

  N11Data data = n11_from_spec(back, tol);
  CHECK(operator_norm(LinearOp(data.d_frak - g.data.d_frak)) < 1e-15);
  CHECK(verify_n11(data, tol).passed());
}

TEST_CASE("parser diagnostics carry line and field") {
  SUBCASE("malformed complex entry") {
    std::istringstream in(
        "kind n11\ndim 1\nalgebra-generators 1\nmatrix\nrow 1+0i\n"
        "grading\nrow oops\nhodge\nrow 1+0i\ndirac-d\nrow 0+0i\n");
    try {
      parse_example_spec(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 7);
      CHECK(std::string(e.what()).find("oops") != std::string::npos);
    }
  }
  SUBCASE("wrong row width") {
    std::istringstream in("kind n1\ndim 2\nalgebra-generators 1\nmatrix\nrow 1+0i\n");
    CHECK_THROWS_AS(parse_example_spec(in), ParseError);
  }
  SUBCASE("missing required blocks") {
    std::istringstream in("kind n1\ndim 1\nalgebra-generators 1\nmatrix\nrow 1+0i\n");
    try {
      parse_example_spec(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.field == "dirac");
    }
  }
  SUBCASE("unknown keyword") {
    std::istringstream in("kind n1\ndim 1\nfrobnicate 3\n");
    CHECK_THROWS_AS(parse_example_spec(in), ParseError);
  }
}

TEST_CASE("hand-written n1 file drives the verifier") {
  Tolerance tol;
  std::istringstream in(
      "format susyspec-example 1\n"
      "name minimal-two-point\n"
      "kind n1\n"
      "dim 2\n"
      "algebra-generators 1\n"
      "matrix\n"
      "row 1+0i 0+0i\n"
      "row 0+0i 0+0i\n"
      "dirac\n"
      "row 0+0i 1+0i\n"
      "row 1+0i 0+0i\n"
      "grading\n"
      "row 1+0i 0+0i\n"
      "row 0+0i -1+0i\n");
  ExampleSpec spec = parse_example_spec(in);
  N1Data d = n1_from_spec(spec, tol);
  CHECK(d.algebra.dim() == 2);
  CHECK(verify_n1(d, tol).passed());
}

TEST_CASE("default module generators give a grading-homogeneous free presentation") {
  Tolerance tol;
  GalleryN1 g = gallery_n1("two-point", tol);
  auto gens = default_module_generators(g.data, tol);
  HermitianModule e = HermitianModule::free(g.data, gens, tol);
  CHECK(e.dim() == 4);
  // each generator is a grading eigenvector
  for (const auto& v : gens) {
    Vector gv = g.data.grading * v;
    const double plus = (gv - v).norm(), minus = (gv + v).norm();
    CHECK(std::min(plus, minus) < 1e-12);
  }
  // and the pipeline built on it extends successfully
  RealStructure rs = make_real_structure(g.data, g.j, tol);
  SpectralSetup s = make_setup(g.data, std::move(rs), std::move(e), tol);
  PhiResult out = phi(s, grassmann(s));
  CHECK(out.report.passed());
}

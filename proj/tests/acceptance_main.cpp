// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every threshold is pinned here; nothing defers to later calibration.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "susyspec/example_spec.hpp"
#include "susyspec/gallery.hpp"

using namespace susyspec;
using namespace susyspec::testing;

namespace {

int failures = 0;

void criterion(int number, const char* text, bool pass, double worst, double bound) {
  std::printf("[%s] criterion %d: %s (worst %.3e vs bound %.3e)\n",
              pass ? "PASS" : "FAIL", number, text, worst, bound);
  if (!pass) ++failures;
}

double worst_of(const CheckReport& r) {
  double w = r.worst_residual();
  for (const auto& e : r.entries)
    if (!e.pass) w = std::max(w, e.residual ? *e.residual : 1.0);
  return w;
}

}  // namespace

int main() {
  const Tolerance tol;  // eq 1e-10, rank 1e-9, fixed for the whole suite
  const double kEq = 1e-10;
  const double kWitness = 1e-6;

  // ----- 1: axiom suite over the whole gallery, plus injected violations
  {
    double worst = 0.0;
    bool pass = true;
    std::vector<ExtensionPipeline> pipelines;
    for (const auto& name : gallery_n1_names()) {
      ExtensionPipeline p = make_gallery_pipeline(name, tol);
      CheckReport n1 = verify_n1(p.setup.data, tol);
      CheckReport rs = verify_real_structure(p.setup.data, p.setup.rs, tol);
      CheckReport n11 = verify_n11(p.phi.candidate, tol);
      pass = pass && n1.passed() && rs.passed() && n11.passed() && p.phi.report.passed();
      worst = std::max({worst, worst_of(n1), worst_of(rs), worst_of(n11)});
      pipelines.push_back(std::move(p));
    }
    for (const auto& name : gallery_n11_names()) {
      CheckReport r = verify_n11(gallery_n11(name, tol).data, tol);
      pass = pass && r.passed();
      worst = std::max(worst, worst_of(r));
    }
    // injected violation: non-self-adjoint dirac
    {
      N1Data bad = gallery_n1("two-point", tol).data;
      bad.dirac(0, 1) += Complex(0.25, 0.0);
      CheckReport r = verify_n1(bad, tol);
      const CheckEntry* e = nullptr;
      for (const auto& entry : r.entries)
        if (entry.name == "dirac-self-adjoint") e = &entry;
      pass = pass && e && !e->pass;
    }
    // injected violation: hodge equal to the grading with d nonzero
    {
      N11Data bad = gallery_n11("n11-minimal", tol).data;
      bad.hodge = bad.grading;
      CheckReport r = verify_n11(bad, tol);
      const CheckEntry* e = r.find("Rem2.4(2)");
      pass = pass && e && !e->pass;
    }
    criterion(1, "axiom suite on the gallery with injected violations detected", pass,
              worst, kEq);
  }

  // ----- 2: the two presentation equivalences on randomized instances
  {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    const Eigen::Index half = 3;
    LinearOp g = LinearOp::Zero(2 * half, 2 * half);
    g.topLeftCorner(half, half) = LinearOp::Identity(half, half);
    g.bottomRightCorner(half, half) = -LinearOp::Identity(half, half);
    LinearOp u = random_unitary(rng, 2 * half);
    LinearOp st = u * g * u.adjoint();
    for (int t = 0; t < 120; ++t) {
      // grading part, forward
      LinearOp d = LinearOp::Zero(2 * half, 2 * half);
      d.topRightCorner(half, half) = random_matrix(rng, half, half);
      d.bottomLeftCorner(half, half) = random_matrix(rng, half, half);
      LinearOp dfrak = d + d.adjoint();
      LinearOp dbar = Complex(0, 1) * (d - d.adjoint());
      worst = std::max({worst, operator_norm(anticommutator(g, dfrak)),
                        operator_norm(anticommutator(g, dbar))});
      // grading part, backward
      LinearOp d2 = 0.5 * (dfrak - Complex(0, 1) * dbar);
      worst = std::max(worst, operator_norm(anticommutator(g, d2)));
      // hodge part, forward: d = y - st y^* st
      LinearOp y = random_matrix(rng, 2 * half, 2 * half);
      LinearOp dh = y - st * y.adjoint() * st;
      LinearOp dhf = dh + dh.adjoint();
      LinearOp dhb = Complex(0, 1) * (dh - dh.adjoint());
      worst = std::max({worst, operator_norm(anticommutator(st, dhf)),
                        operator_norm(commutator(st, dhb))});
      // hodge part, backward
      LinearOp x0 = random_matrix(rng, 2 * half, 2 * half);
      LinearOp x = 0.5 * (x0 + x0.adjoint());
      LinearOp z0 = random_matrix(rng, 2 * half, 2 * half);
      LinearOp z = 0.5 * (z0 + z0.adjoint());
      LinearOp pf = x - st * x * st;
      LinearOp pb = z + st * z * st;
      LinearOp dd = 0.5 * (pf - Complex(0, 1) * pb);
      worst = std::max(worst, operator_norm(LinearOp(st * dd + dd.adjoint() * st)));
    }
    // scale-free comparison against the fixed bound
    criterion(2, "presentation equivalences on 120 randomized instances each way",
              worst <= 1e-10 * 200, worst, 1e-10 * 200);
  }

  // ----- 3: kasparov closure and the flip unitary identity
  {
    double worst = 0.0;
    bool pass = true;
    std::vector<GalleryN1> entries;
    for (const auto& name : gallery_n1_names()) entries.push_back(gallery_n1(name, tol));
    for (const auto& a : entries) {
      for (const auto& b : entries) {
        N1Data prod = kasparov_product(a.data, b.data, tol);
        CheckReport r = verify_n1(prod, tol);
        pass = pass && r.passed();
        worst = std::max(worst, worst_of(r));
        // the displayed unitary swaps the two dirac conventions
        const LinearOp i1 = LinearOp::Identity(a.data.hilbert_dim(), a.data.hilbert_dim());
        const LinearOp i2 = LinearOp::Identity(b.data.hilbert_dim(), b.data.hilbert_dim());
        LinearOp uu = equivalence_unitary(a.data.grading, b.data.grading, tol);
        LinearOp lhs = uu *
                       (kronecker(a.data.dirac, i2) + kronecker(a.data.grading, b.data.dirac)) *
                       uu.adjoint();
        LinearOp rhs = kronecker(a.data.dirac, b.data.grading) + kronecker(i1, b.data.dirac);
        worst = std::max(worst, operator_norm(LinearOp(lhs - rhs)));
      }
    }
    criterion(3, "kasparov products verify and the flip unitary identity holds",
              pass && worst <= kEq, worst, kEq);
  }

  // desk-scale pairs for the product-side criteria (H1 * H2 <= 16)
  std::vector<std::string> small = {"trivial", "two-point"};
  std::vector<ExtensionPipeline> small_pipes;
  for (const auto& n : small) small_pipes.push_back(make_gallery_pipeline(n, tol));

  // ----- 4: the product pipeline against its closed forms, stage by stage
  {
    ProductPipeline pp = make_product_pipeline(small_pipes[1], small_pipes[1]);
    LemmaChainTrace t = product_pipeline_trace(small_pipes[1], small_pipes[1], pp, tol);
    criterion(4, "product pipeline closed forms on two-point x two-point",
              t.report.passed(), worst_of(t.report), kEq);
  }

  // ----- 5 and 6: the positive and negative halves of the comparison
  {
    double worst5 = 0.0;
    bool pass5 = true;
    std::array<double, 6> best_witness{};  // per variant, max over pairs
    for (const auto& p1 : small_pipes) {
      for (const auto& p2 : small_pipes) {
        if (!p1.phi.report.passed() || !p2.phi.report.passed()) continue;
        ProductPipeline pp = make_product_pipeline(p1, p2);
        MultiplicativityResult res = check_multiplicativity(
            p1, p2, pp, {kAllVariants.begin(), kAllVariants.end()}, tol);
        for (const auto& v : res.verdicts) {
          const size_t k = static_cast<size_t>(v.variant);
          const double mismatch = std::max(v.residual_d, v.residual_dbar);
          if (v.variant == ProductVariant::kMain) {
            pass5 = pass5 && v.equal;
            worst5 = std::max(worst5, mismatch);
          } else {
            best_witness[k] = std::max(best_witness[k], mismatch);
          }
        }
      }
    }
    criterion(5, "main product matches the extended product on every extendable pair",
              pass5 && worst5 <= kEq, worst5, kEq);
    double least = 1e300;
    for (size_t k = 1; k < 6; ++k) least = std::min(least, best_witness[k]);
    criterion(6, "each alternative product is witnessed unequal on some pair",
              least > kWitness, least, kWitness);
  }

  // ----- 7: all six products preserve validity on verified pairs
  {
    std::vector<N11Data> verified = {gallery_n11("n11-trivial", tol).data,
                                     gallery_n11("n11-minimal", tol).data,
                                     small_pipes[1].phi.candidate,
                                     make_gallery_pipeline("nc-two-point", tol).phi.candidate};
    double worst = 0.0;
    bool pass = true;
    for (const auto& x : verified)
      for (const auto& y : verified)
        for (ProductVariant v : kAllVariants) {
          CheckReport r = verify_n11(n11_product(x, y, v, tol), tol);
          pass = pass && r.passed();
          worst = std::max(worst, worst_of(r));
        }
    criterion(7, "all six products preserve validity on verified pairs", pass, worst, kEq);
  }

  // ----- 8: balanced-tensor quotient dimensions against brute-force enumeration
  {
    bool pass = true;
    double gap = 0.0;
    for (const auto& name : gallery_n1_names()) {
      GalleryN1 g = gallery_n1(name, tol);
      SpectralSetup s = make_gallery_setup(g, tol);
      const Eigen::Index m = s.e_dim();
      std::vector<Vector> rels;
      for (size_t a = 0; a < s.e_space.right.size(); ++a)
        for (Eigen::Index i = 0; i < m; ++i)
          for (Eigen::Index j = 0; j < m; ++j) {
            Vector ei = Vector::Zero(m), ej = Vector::Zero(m);
            ei(i) = 1.0;
            ej(j) = 1.0;
            rels.push_back(kron_vec(Vector(s.e_space.right[a] * ei), ej) -
                           kron_vec(ei, Vector(s.e_space.left[a] * ej)));
          }
      const Eigen::Index brute = m * m - elimination_rank_of_vectors(rels, 1e-7);
      pass = pass && (brute == s.ee.space.dim() + s.ee.space.extra_kernel());
      gap = std::max(gap, static_cast<double>(
                              std::abs(brute - s.ee.space.dim() - s.ee.space.extra_kernel())));
    }
    criterion(8, "balanced quotient dimensions equal brute-force enumeration", pass, gap,
              0.5);
  }

  // ----- 9: reports are byte-identical across repeated runs
  {
    const char* cli = std::getenv("SUSYSPEC_CLI");
    bool pass = true;
    if (cli == nullptr) {
      std::printf("[FAIL] criterion 9: SUSYSPEC_CLI not set\n");
      ++failures;
    } else {
      auto run = [&](const std::string& args, const std::string& path) {
        const std::string cmd =
            std::string(cli) + " " + args + " > " + path + " 2> /dev/null";
        return std::system(cmd.c_str()) >= 0;
      };
      auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
      };
      const std::array<std::string, 3> cmds = {
          "verify-n1 --gallery two-point", "extend --gallery nc-two-point --seed 7",
          "check-mult --gallery-pair two-point two-point --variants main,v4"};
      int k = 0;
      for (const auto& args : cmds) {
        const std::string p1 = "/tmp/susyspec_det_a" + std::to_string(k);
        const std::string p2 = "/tmp/susyspec_det_b" + std::to_string(k);
        pass = pass && run(args, p1) && run(args, p2);
        const std::string a = slurp(p1), b = slurp(p2);
        pass = pass && !a.empty() && a == b;
        ++k;
      }
      criterion(9, "repeated runs produce byte-identical reports", pass, pass ? 0.0 : 1.0,
                0.5);
    }
  }

  std::printf("acceptance: %d criterion failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}

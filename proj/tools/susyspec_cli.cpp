// Command line front end: batch verification of spectral data, the extension
// procedure, and the six-product multiplicativity comparison.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "susyspec/example_spec.hpp"
#include "susyspec/gallery.hpp"

namespace {

using namespace susyspec;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
  double tol_eq = 1e-10;
  double tol_rank = 1e-9;
  std::string output;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--tol", opt.tol_eq, "operator-norm equality threshold");
  cmd->add_option("--tol-rank", opt.tol_rank, "singular-value rank cutoff");
  cmd->add_option("--output", opt.output, "write the report to this path as well");
}

int emit(const ReportDocument& doc, const CommonOptions& opt,
         std::chrono::steady_clock::time_point start) {
  const std::string text = doc.to_string();
  std::cout << text;
  if (!opt.output.empty()) {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << opt.output << "\n";
      return kExitInputError;
    }
    out << text;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "# timing " << elapsed.count() << " ms\n";
  return doc.checks.passed() ? kExitPass : kExitCheckFailure;
}

struct N1Input {
  N1Data data;
  std::optional<AntilinearOp> j;
  std::vector<Vector> module_generators;
  std::vector<std::vector<LinearOp>> projection;
  std::optional<std::uint64_t> alpha_seed;
  double alpha_scale = 0.25;
  std::string gallery_name;  // nonempty for gallery entries
  std::string descriptor;
};

N1Input load_n1(const std::string& gallery, const std::string& input,
                const Tolerance& tol) {
  N1Input in;
  if (!gallery.empty()) {
    GalleryN1 g = gallery_n1(gallery, tol);
    in.data = g.data;
    in.j = g.j;
    in.module_generators = g.generators;
    in.projection = g.projection;
    in.gallery_name = gallery;
    in.descriptor = "gallery:" + gallery;
    return in;
  }
  ExampleSpec spec = parse_example_spec_file(input);
  in.data = n1_from_spec(spec, spec.tolerance(tol));
  if (spec.real_structure) in.j = AntilinearOp(*spec.real_structure);
  in.module_generators = spec.module_generators;
  in.projection = spec.projection;
  in.alpha_seed = spec.alpha_seed;
  in.alpha_scale = spec.alpha_scale;
  in.descriptor = "file:" + input;
  return in;
}

ExtensionPipeline build_pipeline(const N1Input& in, const Tolerance& tol,
                                 std::optional<std::uint64_t> seed, double alpha_scale,
                                 HodgeChoice hodge) {
  RealStructure rs = make_real_structure(in.data, *in.j, tol);
  std::vector<Vector> gens = in.module_generators;
  if (gens.empty()) gens = default_module_generators(in.data, tol);
  HermitianModule mod =
      in.projection.empty()
          ? HermitianModule::free(in.data, gens, tol)
          : HermitianModule::projective(in.data, gens, in.projection, tol);

  ExtensionPipeline p;
  p.setup = make_setup(in.data, std::move(rs), std::move(mod), tol);
  if (in.gallery_name.empty()) {
    p.connection = grassmann(p.setup);
  } else {
    p.connection = gallery_connection(gallery_n1(in.gallery_name, tol), p.setup);
  }
  std::optional<std::uint64_t> alpha = seed ? seed : in.alpha_seed;
  if (alpha) {
    LinearOp a = random_module_map(p.setup, *alpha, alpha_scale, /*gamma_even=*/true);
    p.connection = perturbed(p.connection, a);
  }
  p.phi = phi(p.setup, p.connection, hodge);
  return p;
}

int cmd_list_gallery() {
  Tolerance tol;
  for (const auto& name : gallery_n1_names()) {
    GalleryN1 g = gallery_n1(name, tol);
    std::cout << name << "  kind=n1 dim=" << g.data.hilbert_dim() << "  "
              << g.description << "\n";
  }
  for (const auto& name : gallery_n11_names()) {
    GalleryN11 g = gallery_n11(name, tol);
    std::cout << name << "  kind=n11 dim=" << g.data.space_dim() << "  "
              << g.description << "\n";
  }
  return kExitPass;
}

int cmd_verify_n1(const std::string& gallery, const std::string& input,
                  const CommonOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Tolerance tol(opt.tol_eq, opt.tol_rank);
  N1Input in = load_n1(gallery, input, tol);

  ReportDocument doc;
  doc.command = "verify-n1";
  doc.input_descriptor = in.descriptor;
  doc.tol = tol;
  doc.checks = verify_n1(in.data, tol);
  if (in.j) {
    RealStructure rs = make_real_structure(in.data, *in.j, tol);
    doc.checks.merge(verify_real_structure(in.data, rs, tol));
    KoClassification ko = classify_ko(rs, /*with_gamma=*/true);
    std::string dims;
    for (int n : ko.dims) dims += (dims.empty() ? "" : ",") + std::to_string(n);
    doc.extra.emplace_back("ko-dimensions", ko.consistent ? dims : "inconsistent");
    doc.checks.boolean("KO-table", "sign-table-consistent", ko.consistent);
  }
  return emit(doc, opt, start);
}

int cmd_verify_n11(const std::string& gallery, const std::string& input,
                   const CommonOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Tolerance tol(opt.tol_eq, opt.tol_rank);
  N11Data data;
  std::string descriptor;
  if (!gallery.empty()) {
    data = gallery_n11(gallery, tol).data;
    descriptor = "gallery:" + gallery;
  } else {
    ExampleSpec spec = parse_example_spec_file(input);
    data = n11_from_spec(spec, spec.tolerance(tol));
    descriptor = "file:" + input;
  }
  ReportDocument doc;
  doc.command = "verify-n11";
  doc.input_descriptor = descriptor;
  doc.tol = tol;
  doc.checks = verify_n11(data, tol);
  return emit(doc, opt, start);
}

int cmd_extend(const std::string& gallery, const std::string& input,
               const CommonOptions& opt, const std::string& hodge,
               double alpha_scale, const std::string& candidate_path) {
  const auto start = std::chrono::steady_clock::now();
  Tolerance tol(opt.tol_eq, opt.tol_rank);
  N1Input in = load_n1(gallery, input, tol);
  if (!in.j) {
    std::cerr << "error: extend needs a real structure\n";
    return kExitInputError;
  }

  // preconditions: the input must pass the even axioms and real-structure checks
  CheckReport pre = verify_n1(in.data, tol);
  RealStructure rs0 = make_real_structure(in.data, *in.j, tol);
  pre.merge(verify_real_structure(in.data, rs0, tol));
  if (!pre.passed()) {
    for (const auto& e : pre.entries)
      if (!e.pass)
        std::cerr << "error: precondition failed: " << e.tag << " " << e.name << "\n";
    return kExitInputError;
  }

  HodgeChoice hc = HodgeChoice::kOneTensorGamma;
  if (hodge == "gamma-tensor-1") hc = HodgeChoice::kGammaTensorOne;
  else if (!hodge.empty() && hodge != "1-tensor-gamma") {
    std::cerr << "error: --hodge must be 1-tensor-gamma or gamma-tensor-1\n";
    return kExitInputError;
  }

  ExtensionPipeline p = build_pipeline(in, tol, opt.seed, alpha_scale, hc);

  ReportDocument doc;
  doc.command = "extend";
  doc.input_descriptor = in.descriptor;
  doc.tol = tol;
  doc.seed = opt.seed ? opt.seed : in.alpha_seed;
  doc.extra.emplace_back("hodge", hodge.empty() ? "1-tensor-gamma" : hodge);
  doc.extra.emplace_back("extension-space-dim", std::to_string(p.setup.ee.space.dim()));
  doc.checks = p.phi.report;
  if (!candidate_path.empty()) {
    ExampleSpec out = spec_from_n11(p.phi.candidate, "extended");
    std::ofstream f(candidate_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << candidate_path << "\n";
      return kExitInputError;
    }
    f << write_example_spec(out);
  }
  return emit(doc, opt, start);
}

int cmd_check_mult(const std::vector<std::string>& galleries,
                   const std::vector<std::string>& inputs, const CommonOptions& opt,
                   const std::string& variants_text) {
  const auto start = std::chrono::steady_clock::now();
  Tolerance tol(opt.tol_eq, opt.tol_rank);

  std::vector<N1Input> ins;
  if (galleries.size() == 2) {
    for (const auto& g : galleries) ins.push_back(load_n1(g, "", tol));
  } else if (inputs.size() == 2) {
    for (const auto& f : inputs) ins.push_back(load_n1("", f, tol));
  } else {
    std::cerr << "error: check-mult needs exactly two inputs\n";
    return kExitInputError;
  }
  for (const auto& in : ins)
    if (!in.j) {
      std::cerr << "error: both inputs need real structures\n";
      return kExitInputError;
    }

  std::vector<ProductVariant> variants;
  if (variants_text.empty() || variants_text == "all") {
    variants.assign(kAllVariants.begin(), kAllVariants.end());
  } else {
    std::stringstream ss(variants_text);
    std::string item;
    while (std::getline(ss, item, ',')) variants.push_back(variant_from_name(item));
  }

  ExtensionPipeline p1 = build_pipeline(ins[0], tol, opt.seed, 0.25,
                                        HodgeChoice::kOneTensorGamma);
  ExtensionPipeline p2 = build_pipeline(ins[1], tol, opt.seed, 0.25,
                                        HodgeChoice::kOneTensorGamma);
  ProductPipeline pp = make_product_pipeline(p1, p2);
  MultiplicativityResult res = check_multiplicativity(p1, p2, pp, variants, tol);

  ReportDocument doc;
  doc.command = "check-mult";
  doc.input_descriptor = ins[0].descriptor + " " + ins[1].descriptor;
  doc.tol = tol;
  doc.seed = opt.seed;
  for (const auto& v : res.verdicts) {
    doc.extra.emplace_back(
        "variant-" + std::string(variant_name(v.variant)),
        std::string(v.equal ? "equal" : "unequal") + " residual-d=" +
            format_double(v.residual_d) + " residual-dbar=" + format_double(v.residual_dbar));
  }
  doc.checks = res.report;
  return emit(doc, opt, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite workbench for supersymmetric spectral data"};
  app.require_subcommand(1);

  CommonOptions vopt, wopt, eopt, mopt;
  std::string v_gallery, v_input, w_gallery, w_input, e_gallery, e_input;
  std::string hodge, candidate_path, variants;
  double alpha_scale = 0.25;
  std::vector<std::string> m_galleries, m_inputs;

  app.add_subcommand("list-gallery", "list the shipped worked examples");

  auto* vn1 = app.add_subcommand("verify-n1", "check the even spectral data axioms");
  vn1->add_option("--gallery", v_gallery, "gallery entry name");
  vn1->add_option("--input", v_input, "example file");
  add_common(vn1, vopt);

  auto* vn11 = app.add_subcommand("verify-n11", "check the N=(1,1) axioms");
  vn11->add_option("--gallery", w_gallery, "gallery entry name");
  vn11->add_option("--input", w_input, "example file");
  add_common(vn11, wopt);

  auto* ext = app.add_subcommand("extend", "run the extension procedure");
  ext->add_option("--gallery", e_gallery, "gallery entry name");
  ext->add_option("--input", e_input, "example file");
  ext->add_option("--seed", eopt.seed, "seed for a random even connection perturbation");
  ext->add_option("--alpha-scale", alpha_scale, "perturbation scale");
  ext->add_option("--hodge", hodge, "1-tensor-gamma (default) or gamma-tensor-1");
  ext->add_option("--output-candidate", candidate_path, "serialize the candidate here");
  add_common(ext, eopt);

  auto* mult = app.add_subcommand("check-mult", "compare the six tensor products");
  mult->add_option("--gallery-pair", m_galleries, "two gallery entry names")->expected(2);
  mult->add_option("--inputs", m_inputs, "two example files")->expected(2);
  mult->add_option("--variants", variants, "all or comma list of main,v1..v5");
  mult->add_option("--seed", mopt.seed, "seed for connection perturbations");
  add_common(mult, mopt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list-gallery")) return cmd_list_gallery();
    if (app.got_subcommand(vn1)) {
      if (v_gallery.empty() == v_input.empty()) {
        std::cerr << "error: give exactly one of --gallery/--input\n";
        return kExitInputError;
      }
      return cmd_verify_n1(v_gallery, v_input, vopt);
    }
    if (app.got_subcommand(vn11)) {
      if (w_gallery.empty() == w_input.empty()) {
        std::cerr << "error: give exactly one of --gallery/--input\n";
        return kExitInputError;
      }
      return cmd_verify_n11(w_gallery, w_input, wopt);
    }
    if (app.got_subcommand(ext)) {
      if (e_gallery.empty() == e_input.empty()) {
        std::cerr << "error: give exactly one of --gallery/--input\n";
        return kExitInputError;
      }
      return cmd_extend(e_gallery, e_input, eopt, hodge, alpha_scale, candidate_path);
    }
    if (app.got_subcommand(mult))
      return cmd_check_mult(m_galleries, m_inputs, mopt, variants);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

#ifndef SUSYSPEC_GALLERY_HPP
#define SUSYSPEC_GALLERY_HPP

#include <string>

#include "susyspec/multiplicativity.hpp"

namespace susyspec {

/// Worked examples shipped with the tool. The even entries carry a real
/// structure and a module presentation with grading-homogeneous generators,
/// so the whole extension pipeline runs on them.
struct GalleryN1 {
  std::string name;
  std::string description;
  N1Data data;
  AntilinearOp j;
  std::vector<Vector> generators;
  std::vector<std::vector<LinearOp>> projection;  // empty for free presentations
  bool perturbed_connection = false;  // entry ships a non-Grassmann connection
};

struct GalleryN11 {
  std::string name;
  std::string description;
  N11Data data;
};

std::vector<std::string> gallery_n1_names();
std::vector<std::string> gallery_n11_names();
GalleryN1 gallery_n1(const std::string& name, const Tolerance& tol);
GalleryN11 gallery_n11(const std::string& name, const Tolerance& tol);

SpectralSetup make_gallery_setup(const GalleryN1& entry, const Tolerance& tol);

/// Basis (columns, vectorized) of gamma-even A-linear perturbations that keep
/// both extension operators self-adjoint; the affine family the pipeline can
/// sample without leaving the verified regime.
LinearOp selfadjoint_perturbation_basis(const SpectralSetup& s, const Connection& base);

/// Gallery connection: Grassmann, plus a deterministic self-adjointness
/// preserving perturbation for entries marked perturbed_connection (the
/// Grassmann extension is degenerate there and the perturbed one is not).
Connection gallery_connection(const GalleryN1& entry, const SpectralSetup& s);

ExtensionPipeline make_gallery_pipeline(const std::string& name, const Tolerance& tol,
                                        HodgeChoice hodge = HodgeChoice::kOneTensorGamma);

}  // namespace susyspec

#endif

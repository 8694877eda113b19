#pragma once

#include "gssf/contact/catalog.hpp"

#include <string>
#include <vector>

namespace gssf {

struct ResidualEntry {
  std::string name;   // identity label, e.g. "nabla-xi"
  double residual = 0.0;
};

struct GssfReport {
  std::vector<ResidualEntry> entries;
  double max_residual = 0.0;
  bool pass = false;

  double residual(std::string_view name) const;
};

/// Checks the numeric curvature against the ansatz and the identities
/// derived from it:
///   axioms           almost contact metric axioms
///   curvature        R(X,Y)Z − ansatz over frame triples
///   nabla-phi        (∇_X φ)Y = (f1−f3)[g(X,Y)ξ − η(Y)X]
///   nabla-xi         ∇_X ξ = −(f1−f3) φX
///   ricci            S = (2n f1 + 3f2 − f3) g − (3f2 + (2n−1) f3) η⊗η
///   curvature-xi     R(X,Y)ξ = (f1−f3)(η(Y)X − η(X)Y)
///   xi-curvature-xi  R(ξ,X)ξ = (f1−f3)(η(X)ξ − X)
///   ricci-xi-xi      S(ξ,ξ) = 2n (f1−f3)
/// The frame is the coordinate basis plus ξ and one φ-image.
GssfReport validate_gssf(const ModelSpace& space, std::span<const double> p, double tol);

/// Frame used by validate_gssf at a point.
std::vector<Vec> validation_frame(const ContactPoint& cp);

/// Sectional curvature of span{X, φX}; X is projected orthogonally to ξ
/// and normalized. Throws DegeneratePlaneError when ‖φX‖ < 1e-8 ‖X‖.
double phi_sectional_curvature(const ModelSpace& space, const Vec& x, std::span<const double> p);

}  // namespace gssf

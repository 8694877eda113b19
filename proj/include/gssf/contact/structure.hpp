#pragma once

// Almost contact metric structures and the generalized Sasakian-space-form
// curvature ansatz
//
//   R(X,Y)Z = f1 {g(Y,Z)X - g(X,Z)Y}
//           + f2 {g(X,φZ)φY - g(Y,φZ)φX + 2 g(X,φY)φZ}
//           + f3 {η(X)η(Z)Y - η(Y)η(Z)X + g(X,Z)η(Y)ξ - g(Y,Z)η(X)ξ}.

#include "gssf/manifold/metric.hpp"

#include <string>
#include <vector>

namespace gssf {

struct ContactStructure {
  MetricModel metric;
  TensorField phi;  // (1,1): phi(l, j) = φ^l_j
  TensorField xi;   // (1,0)
  TensorField eta;  // (0,1)
  int n = 1;        // dim = 2n + 1

  int dim() const { return metric.dim; }
};

/// φ, ξ, η and g evaluated at one point.
struct ContactPoint {
  Mat g;
  Mat phi;
  Vec xi;
  Vec eta;

  double inner(const Vec& a, const Vec& b) const { return a.dot(g * b); }
};

ContactPoint evaluate(const ContactStructure& cs, std::span<const double> p);

struct GssfParams {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;

  double f1_minus_f3() const { return f1 - f3; }
};

/// Coefficients of the Sasakian-space-form of constant φ-sectional
/// curvature c. The f2 = f3 = (c - 1)/4 form is the one the standard
/// structures satisfy; see README.
GssfParams sasakian_params(double c);

/// Right-hand side of the curvature ansatz at one point.
Vec gssf_ansatz(const GssfParams& params, const ContactPoint& cp, const Vec& x, const Vec& y,
                const Vec& z);
Vec gssf_ansatz(const GssfParams& params, const ContactStructure& cs, const Vec& x, const Vec& y,
                const Vec& z, std::span<const double> p);

/// Ricci tensor and scalar curvature implied by the ansatz (contracted
/// in closed form).
Mat gssf_ricci(const GssfParams& params, const ContactPoint& cp, int n);
double gssf_scalar(const GssfParams& params, int n);

/// Max residual of η(ξ)=1, φ²=-I+η⊗ξ, φξ=0, η∘φ=0, g(φ·,φ·)=g-η⊗η, η=g(·,ξ).
double contact_axiom_residual(const ContactPoint& cp);

}  // namespace gssf

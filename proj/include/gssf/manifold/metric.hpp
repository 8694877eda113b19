#pragma once

// Levi-Civita connection and curvature of a single-chart Riemannian metric.
//
// Conventions:
//   Gamma(l, i, j)      = Γ^l_ij, slots (up, down, down)
//   riemann13(l, i, j, k) = dx^l( R(∂i, ∂j) ∂k ),
//       R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_[X,Y]
//   riemann04(i, j, k, w) = g( R(∂i, ∂j) ∂k, ∂w )
//   ricci(j, k)         = trace of X ↦ R(X, ∂j) ∂k

#include "gssf/tensor_core/field.hpp"
#include "gssf/tensor_core/linalg.hpp"
#include "gssf/tensor_core/sampling.hpp"

#include <string>
#include <vector>

namespace gssf {

struct MetricModel {
  std::string name;
  int dim = 0;
  ComponentFn components;  // dim*dim jets, row-major, symmetric
  SampleBox box;

  JetMatrix jets(JetPoint x) const;
  Mat at(std::span<const double> p) const;
};

/// Throws NumericInversionError when the metric at p is not symmetric
/// positive definite.
void check_metric(const MetricModel& m, std::span<const double> p);

struct CurvatureBundle {
  TensorValue gamma;      // (1,2)
  TensorValue riemann13;  // (1,3)
  TensorValue riemann04;  // (0,4)
  TensorValue ricci;      // (0,2)
  double scalar = 0.0;
};

/// Γ^l_ij as jets one order below the metric jets.
std::vector<ScalarJet> christoffel_jets(const JetMatrix& g);

/// Curvature from metric jets of order >= 2.
CurvatureBundle curvature_from_jets(const JetMatrix& g);

TensorValue christoffel(const MetricModel& m, std::span<const double> p);
CurvatureBundle curvature_bundle(const MetricModel& m, std::span<const double> p);

/// ∇T for a (0,k) or (1,k) field; the derivative slot is appended last,
/// i.e. result(..., i) = (∇_{∂i} T)(...).
TensorValue covariant_derivative(const TensorField& field, const MetricModel& m,
                                 std::span<const double> p);

/// [X, Y] for (1,0) fields.
Vec lie_bracket(const TensorField& x, const TensorField& y, std::span<const double> p);

// Pointwise helpers on evaluated curvature.
Vec apply_riemann(const TensorValue& riemann13, const Vec& x, const Vec& y, const Vec& z);

}  // namespace gssf

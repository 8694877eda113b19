#pragma once

// Analytic fields on a chart. A field is a callable on jet coordinates, so
// the same definition yields plain values (order 0) or exact derivatives.

#include "gssf/tensor_core/jet.hpp"
#include "gssf/tensor_core/tensor.hpp"

#include <functional>
#include <span>
#include <vector>

namespace gssf {

using JetPoint = std::span<const ScalarJet>;
using ScalarField = std::function<ScalarJet(JetPoint)>;

/// Component function of a tensor field; returns dims^rank jets in
/// TensorValue layout.
using ComponentFn = std::function<std::vector<ScalarJet>(JetPoint)>;

struct TensorField {
  int dims = 0;
  std::vector<Variance> slots;
  ComponentFn components;

  std::vector<ScalarJet> eval(JetPoint x) const { return components(x); }
  TensorValue at(std::span<const double> p) const;
};

/// Jet of `f` at `p` up to `order`; throws EvaluationError on non-finite output.
ScalarJet differentiate_field(const ScalarField& f, std::span<const double> p, int order);

/// Values of a jet vector at the expansion point.
TensorValue values_of(int dims, std::vector<Variance> slots, std::span<const ScalarJet> comps);

}  // namespace gssf

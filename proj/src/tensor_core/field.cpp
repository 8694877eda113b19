#include "gssf/tensor_core/field.hpp"

#include "gssf/tensor_core/errors.hpp"

#include <sstream>

namespace gssf {

EvaluationError::EvaluationError(const std::string& what, std::span<const double> point)
    : Error([&] {
        std::ostringstream os;
        os << what << " at (";
        for (std::size_t i = 0; i < point.size(); ++i) os << (i ? ", " : "") << point[i];
        os << ")";
        return os.str();
      }()),
      point_(point.begin(), point.end()) {}

TensorValue TensorField::at(std::span<const double> p) const {
  auto x = jet_point(p, 0);
  return values_of(dims, slots, eval(x));
}

ScalarJet differentiate_field(const ScalarField& f, std::span<const double> p, int order) {
  auto x = jet_point(p, order);
  ScalarJet out = f(x);
  if (!out.all_finite()) throw EvaluationError("non-finite field value", p);
  // Constant fields come back untyped; give them the requested space.
  if (!out.space()) out += ScalarJet::constant(JetSpace::get(static_cast<int>(p.size()), order), 0.0);
  return out;
}

TensorValue values_of(int dims, std::vector<Variance> slots, std::span<const ScalarJet> comps) {
  TensorValue t = slots.empty() ? TensorValue::scalar(0.0) : TensorValue(dims, std::move(slots));
  for (std::size_t i = 0; i < comps.size(); ++i) t.entries()[i] = comps[i].value();
  return t;
}

}  // namespace gssf

#include "gssf/submanifold/embedding.hpp"

#include "gssf/tensor_core/errors.hpp"

#include <algorithm>
#include <numbers>

namespace gssf {

std::vector<double> EmbeddingModel::image(std::span<const double> q) const {
  const auto x = jet_point(q, 0);
  const auto y = map(x);
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i].value();
  return out;
}

namespace {

// Coordinate slice: chart coordinate i goes to ambient slot slots[i], the
// remaining ambient coordinates are 0.
EmbeddingModel slice(std::string name, ModelSpace ambient, std::vector<int> slots) {
  EmbeddingModel e;
  e.name = std::move(name);
  e.m = static_cast<int>(slots.size());
  e.box = SampleBox::cube(e.m);
  const int d = ambient.dim();
  e.map = [d, slots](JetPoint x) {
    std::vector<ScalarJet> y(d);
    for (std::size_t i = 0; i < slots.size(); ++i) y[slots[i]] = x[i];
    return y;
  };
  e.ambient = std::move(ambient);
  return e;
}

}  // namespace

EmbeddingModel identity_embedding(const ModelSpace& space) {
  std::vector<int> slots(space.dim());
  for (int i = 0; i < space.dim(); ++i) slots[i] = i;
  EmbeddingModel e = slice("identity", space, slots);
  e.box = space.box;
  return e;
}

const std::vector<std::string>& embedding_names() {
  static const std::vector<std::string> names = {"r3-in-r5-sasakian", "h3-in-h5-kenmotsu",
                                                 "slice-anti-invariant", "circle-calibration",
                                                 "identity"};
  return names;
}

std::string embedding_ambient(std::string_view name) {
  if (name == "r3-in-r5-sasakian" || name == "slice-anti-invariant") return "sasakian-r5";
  if (name == "h3-in-h5-kenmotsu") return "kenmotsu-h5";
  if (name == "circle-calibration") return "cosymplectic-flat-3";
  return {};
}

EmbeddingModel builtin_embedding(std::string_view name, std::string_view space) {
  const bool known = std::find(embedding_names().begin(), embedding_names().end(), name) !=
                     embedding_names().end();
  if (!known) {
    std::string msg = "unknown embedding '" + std::string(name) + "'; valid names:";
    for (const auto& n : embedding_names()) msg += " " + n;
    throw CatalogError(msg);
  }
  if (name == "identity") {
    if (space.empty()) throw CatalogError("embedding 'identity' needs an ambient space");
    return identity_embedding(builtin_space(space));
  }
  const std::string ambient = embedding_ambient(name);
  if (!space.empty() && space != ambient)
    throw CatalogError("embedding '" + std::string(name) + "' lives in " + ambient + ", not " +
                       std::string(space));

  // sasakian-r5 chart: (x1, y1, x2, y2, z); kenmotsu-h5 chart: (t, x1, y1, x2, y2).
  if (name == "r3-in-r5-sasakian") return slice(std::string(name), builtin_space(ambient), {0, 1, 4});
  if (name == "h3-in-h5-kenmotsu") return slice(std::string(name), builtin_space(ambient), {0, 1, 2});
  if (name == "slice-anti-invariant") return slice(std::string(name), builtin_space(ambient), {0, 4});

  // θ ↦ (cos θ, sin θ, 0), unit circle in the flat (x, y) plane.
  EmbeddingModel e;
  e.name = std::string(name);
  e.ambient = builtin_space(ambient);
  e.m = 1;
  e.box = SampleBox{{{0.0, 2.0 * std::numbers::pi}}};
  e.map = [](JetPoint x) { return std::vector<ScalarJet>{cos(x[0]), sin(x[0]), ScalarJet(0.0)}; };
  return e;
}

}  // namespace gssf

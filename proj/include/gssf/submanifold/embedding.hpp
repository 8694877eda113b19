#pragma once

#include "gssf/contact/catalog.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gssf {

/// A chart map from an m-dimensional parameter box into the ambient chart.
/// `map` takes m coordinate jets and returns ambient-dimension jets.
struct EmbeddingModel {
  std::string name;
  ModelSpace ambient;
  int m = 0;
  ComponentFn map;
  SampleBox box;

  std::vector<double> image(std::span<const double> q) const;
};

/// r3-in-r5-sasakian, h3-in-h5-kenmotsu, slice-anti-invariant,
/// circle-calibration, identity.
const std::vector<std::string>& embedding_names();

/// Ambient space an embedding is defined on; empty for "identity", which
/// accepts any space.
std::string embedding_ambient(std::string_view name);

/// Throws CatalogError on an unknown name or an ambient mismatch.
/// `space` is used by "identity" and checked against the others.
EmbeddingModel builtin_embedding(std::string_view name, std::string_view space = {});

EmbeddingModel identity_embedding(const ModelSpace& space);

}  // namespace gssf

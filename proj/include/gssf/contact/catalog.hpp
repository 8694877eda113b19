#pragma once

#include "gssf/contact/structure.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gssf {

struct ModelSpace {
  std::string name;
  ContactStructure structure;
  GssfParams params;
  SampleBox box;

  int dim() const { return structure.dim(); }
  int n() const { return structure.n; }
};

/// Names accepted by builtin_space, in catalog order.
const std::vector<std::string>& space_names();

/// cosymplectic-flat-3, kenmotsu-h3, kenmotsu-h5, sasakian-r3, sasakian-r5.
/// Throws CatalogError for anything else.
ModelSpace builtin_space(std::string_view name);

// Constructors behind the catalog, exposed for tests and custom scenarios.
ModelSpace cosymplectic_flat(int n);
ModelSpace kenmotsu_hyperbolic(int n);
ModelSpace sasakian_euclidean(int n);

}  // namespace gssf

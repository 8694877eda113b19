#pragma once

// key=value config files for gssf-lab. Blank lines and lines starting with
// '#' are ignored. Recognised keys:
//   samples, seed, L1, tol.forward, tol.identity, tol.validate,
//   box.space = lo,hi   box.embedding = lo,hi

#include "gssf/harness/theorem.hpp"
#include "gssf/tensor_core/errors.hpp"

#include <istream>
#include <string>

namespace gssf {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Applies every key in `in` to `s`. Throws ConfigError on unknown keys or
/// malformed values, naming the offending line.
void apply_config(std::istream& in, Scenario& s);
void apply_config_file(const std::string& path, Scenario& s);

}  // namespace gssf

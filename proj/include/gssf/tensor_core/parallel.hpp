#pragma once

// Index-parallel map used by the per-sample-point loops. The serial path is
// the reference; both write results by index, so any reduction done
// afterwards is independent of thread scheduling.

#include <cstddef>
#include <exception>
#include <vector>

namespace gssf {

enum class Execution { Serial, Parallel };

/// out[i] = f(i) for i < count. An exception from f is rethrown after the
/// loop; with several, the one from the lowest index wins.
template <typename R, typename F>
std::vector<R> map_indexed(std::size_t count, F&& f, Execution exec = Execution::Parallel) {
  std::vector<R> out(count);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace gssf

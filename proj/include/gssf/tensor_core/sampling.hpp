#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gssf {

using Point = std::vector<double>;

/// Per-coordinate closed intervals; part of every model definition.
struct SampleBox {
  std::vector<std::pair<double, double>> bounds;

  static SampleBox cube(int dims, double lo = -1.0, double hi = 1.0);
  int dims() const { return static_cast<int>(bounds.size()); }
  bool contains(const Point& p) const;
};

/// Deterministic uniform samples. Uses splitmix64 so the sequence does not
/// depend on the standard library's distribution implementation.
std::vector<Point> sample_points(const SampleBox& box, int count, std::uint64_t seed);

/// Uniform doubles in [lo, hi) from a seeded stream.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : state_(seed) {}
  double next(double lo = 0.0, double hi = 1.0);
  std::uint64_t next_u64();

 private:
  std::uint64_t state_;
};

}  // namespace gssf

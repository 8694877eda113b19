#include "gssf/tensor_core/sampling.hpp"

namespace gssf {

SampleBox SampleBox::cube(int dims, double lo, double hi) {
  SampleBox b;
  b.bounds.assign(dims, {lo, hi});
  return b;
}

bool SampleBox::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dims()) return false;
  for (int i = 0; i < dims(); ++i)
    if (p[i] < bounds[i].first || p[i] > bounds[i].second) return false;
  return true;
}

std::uint64_t UniformStream::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double UniformStream::next(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::vector<Point> sample_points(const SampleBox& box, int count, std::uint64_t seed) {
  UniformStream rng(seed);
  std::vector<Point> out(count, Point(box.dims()));
  for (auto& p : out)
    for (int i = 0; i < box.dims(); ++i) p[i] = rng.next(box.bounds[i].first, box.bounds[i].second);
  return out;
}

}  // namespace gssf

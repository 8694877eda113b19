#include "gssf/contact/catalog.hpp"

#include "gssf/tensor_core/errors.hpp"

namespace gssf {

namespace {

std::vector<ScalarJet> zeros(int count) { return std::vector<ScalarJet>(count); }

TensorField constant_vector(int dim, int axis, double value) {
  return TensorField{dim, {Variance::Up}, [dim, axis, value](JetPoint) {
                       auto v = zeros(dim);
                       v[axis] = ScalarJet(value);
                       return v;
                     }};
}

TensorField constant_covector(int dim, int axis, double value) {
  TensorField f = constant_vector(dim, axis, value);
  f.slots = {Variance::Down};
  return f;
}

}  // namespace

// Coordinates (x1, y1, ..., xn, yn, z); ξ = ∂z, φ∂x_i = ∂y_i.
ModelSpace cosymplectic_flat(int n) {
  const int d = 2 * n + 1;
  ModelSpace s;
  s.name = "cosymplectic-flat-" + std::to_string(d);
  s.box = SampleBox::cube(d);
  s.params = {0.0, 0.0, 0.0};
  auto& cs = s.structure;
  cs.n = n;
  cs.metric = MetricModel{s.name, d, [d](JetPoint) {
                            auto g = zeros(d * d);
                            for (int i = 0; i < d; ++i) g[i * d + i] = ScalarJet(1.0);
                            return g;
                          },
                          s.box};
  cs.phi = TensorField{d, {Variance::Up, Variance::Down}, [d, n](JetPoint) {
                         auto f = zeros(d * d);
                         for (int i = 0; i < n; ++i) {
                           const int x = 2 * i, y = 2 * i + 1;
                           f[y * d + x] = ScalarJet(1.0);
                           f[x * d + y] = ScalarJet(-1.0);
                         }
                         return f;
                       }};
  cs.xi = constant_vector(d, d - 1, 1.0);
  cs.eta = constant_covector(d, d - 1, 1.0);
  return s;
}

// Coordinates (t, x1, y1, ..., xn, yn); g = dt² + e^{2t} Σ (dx_i² + dy_i²).
ModelSpace kenmotsu_hyperbolic(int n) {
  const int d = 2 * n + 1;
  ModelSpace s;
  s.name = "kenmotsu-h" + std::to_string(d);
  s.box = SampleBox::cube(d);
  s.params = {-1.0, 0.0, 0.0};
  auto& cs = s.structure;
  cs.n = n;
  cs.metric = MetricModel{s.name, d, [d](JetPoint x) {
                            auto g = zeros(d * d);
                            g[0] = ScalarJet(1.0);
                            const ScalarJet w = exp(2.0 * x[0]);
                            for (int i = 1; i < d; ++i) g[i * d + i] = w;
                            return g;
                          },
                          s.box};
  cs.phi = TensorField{d, {Variance::Up, Variance::Down}, [d, n](JetPoint) {
                         auto f = zeros(d * d);
                         for (int i = 0; i < n; ++i) {
                           const int x = 1 + 2 * i, y = 2 + 2 * i;
                           f[y * d + x] = ScalarJet(1.0);
                           f[x * d + y] = ScalarJet(-1.0);
                         }
                         return f;
                       }};
  cs.xi = constant_vector(d, 0, 1.0);
  cs.eta = constant_covector(d, 0, 1.0);
  return s;
}

// Coordinates (x1, y1, ..., xn, yn, z); η = (dz − Σ y_i dx_i)/2, ξ = 2∂z,
// g = η⊗η + ¼ Σ (dx_i² + dy_i²), φ∂x_i = −∂y_i, φ∂y_i = ∂x_i + y_i ∂z.
ModelSpace sasakian_euclidean(int n) {
  const int d = 2 * n + 1;
  ModelSpace s;
  s.name = "sasakian-r" + std::to_string(d);
  s.box = SampleBox::cube(d);
  s.params = sasakian_params(-3.0);
  auto& cs = s.structure;
  cs.n = n;
  auto eta = [d, n](JetPoint x) {
    auto e = zeros(d);
    for (int i = 0; i < n; ++i) e[2 * i] = -0.5 * x[2 * i + 1];
    e[d - 1] = ScalarJet(0.5);
    return e;
  };
  cs.metric = MetricModel{s.name, d, [d, eta](JetPoint x) {
                            const auto e = eta(x);
                            auto g = zeros(d * d);
                            for (int i = 0; i < d; ++i)
                              for (int j = 0; j < d; ++j) g[i * d + j] = e[i] * e[j];
                            for (int i = 0; i < d - 1; ++i) g[i * d + i] += 0.25;
                            return g;
                          },
                          s.box};
  cs.phi = TensorField{d, {Variance::Up, Variance::Down}, [d, n](JetPoint x) {
                         auto f = zeros(d * d);
                         for (int i = 0; i < n; ++i) {
                           const int xi = 2 * i, yi = 2 * i + 1;
                           f[yi * d + xi] = ScalarJet(-1.0);
                           f[xi * d + yi] = ScalarJet(1.0);
                           f[(d - 1) * d + yi] = x[yi];
                         }
                         return f;
                       }};
  cs.xi = constant_vector(d, d - 1, 2.0);
  cs.eta = TensorField{d, {Variance::Down}, eta};
  return s;
}

const std::vector<std::string>& space_names() {
  static const std::vector<std::string> names = {"cosymplectic-flat-3", "kenmotsu-h3", "kenmotsu-h5",
                                                 "sasakian-r3", "sasakian-r5"};
  return names;
}

ModelSpace builtin_space(std::string_view name) {
  if (name == "cosymplectic-flat-3") return cosymplectic_flat(1);
  if (name == "kenmotsu-h3") return kenmotsu_hyperbolic(1);
  if (name == "kenmotsu-h5") return kenmotsu_hyperbolic(2);
  if (name == "sasakian-r3") return sasakian_euclidean(1);
  if (name == "sasakian-r5") return sasakian_euclidean(2);
  std::string msg = "unknown space '" + std::string(name) + "'; valid names:";
  for (const auto& n : space_names()) msg += " " + n;
  throw CatalogError(msg);
}

}  // namespace gssf

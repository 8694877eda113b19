#include "gssf/manifold/metric.hpp"

#include "gssf/tensor_core/errors.hpp"

#include <cmath>

namespace gssf {

JetMatrix MetricModel::jets(JetPoint x) const {
  JetMatrix g(dim);
  g.a = components(x);
  if (!x.empty()) pin(g.a, *x[0].space());
  return g;
}

Mat MetricModel::at(std::span<const double> p) const {
  auto x = jet_point(p, 0);
  return jets(x).values();
}

void check_metric(const MetricModel& m, std::span<const double> p) {
  const Mat g = m.at(p);
  if (!g.allFinite()) throw EvaluationError("non-finite metric in " + m.name, p);
  if ((g - g.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw EvaluationError("metric of " + m.name + " is not symmetric", p);
  if (!is_positive_definite(g))
    throw NumericInversionError("metric of " + m.name + " is not positive definite",
                                symmetric_condition(g));
}

std::vector<ScalarJet> christoffel_jets(const JetMatrix& g) {
  const int n = g.n;
  const JetMatrix ginv = inverse(g);
  // dg[c][i*n+j] = ∂_c g_ij
  std::vector<std::vector<ScalarJet>> dg(n, std::vector<ScalarJet>(n * n));
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dg[c][i * n + j] = g(i, j).derivative(c);

  std::vector<ScalarJet> lower(n * n * n);  // Γ_kij
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        lower[(k * n + i) * n + j] =
            0.5 * (dg[i][j * n + k] + dg[j][i * n + k] - dg[k][i * n + j]);

  std::vector<ScalarJet> gamma(n * n * n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        ScalarJet s;
        for (int k = 0; k < n; ++k) s += ginv(l, k) * lower[(k * n + i) * n + j];
        gamma[(l * n + i) * n + j] = s;
        gamma[(l * n + j) * n + i] = s;
      }
  return gamma;
}

CurvatureBundle curvature_from_jets(const JetMatrix& g) {
  const int n = g.n;
  const auto gam = christoffel_jets(g);
  auto G = [&](int l, int i, int j) -> const ScalarJet& { return gam[(l * n + i) * n + j]; };

  CurvatureBundle b;
  b.gamma = TensorValue(n, {Variance::Up, Variance::Down, Variance::Down});
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.gamma(l, i, j) = G(l, i, j).value();

  b.riemann13 = TensorValue(n, {Variance::Up, Variance::Down, Variance::Down, Variance::Down});
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double r = G(l, j, k).derivative(i).value() - G(l, i, k).derivative(j).value();
          for (int m = 0; m < n; ++m)
            r += b.gamma(l, i, m) * b.gamma(m, j, k) - b.gamma(l, j, m) * b.gamma(m, i, k);
          b.riemann13(l, i, j, k) = r;
          b.riemann13(l, j, i, k) = -r;
        }

  const Mat gv = g.values();
  b.riemann04 = TensorValue(n, {Variance::Down, Variance::Down, Variance::Down, Variance::Down});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) {
          double s = 0.0;
          for (int l = 0; l < n; ++l) s += gv(w, l) * b.riemann13(l, i, j, k);
          b.riemann04(i, j, k, w) = s;
        }

  b.ricci = TensorValue(n, {Variance::Down, Variance::Down});
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += b.riemann13(i, i, j, k);
      b.ricci(j, k) = s;
    }

  const Mat ginv = inverse_symmetric(gv);
  double r = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) r += ginv(j, k) * b.ricci(j, k);
  b.scalar = r;
  return b;
}

TensorValue christoffel(const MetricModel& m, std::span<const double> p) {
  check_metric(m, p);
  auto x = jet_point(p, 1);
  const auto gam = christoffel_jets(m.jets(x));
  return values_of(m.dim, {Variance::Up, Variance::Down, Variance::Down}, gam);
}

CurvatureBundle curvature_bundle(const MetricModel& m, std::span<const double> p) {
  check_metric(m, p);
  auto x = jet_point(p, 2);
  return curvature_from_jets(m.jets(x));
}

TensorValue covariant_derivative(const TensorField& field, const MetricModel& m,
                                 std::span<const double> p) {
  const int n = m.dim;
  if (field.dims != n) throw Error("field dimension does not match the metric");
  const TensorValue gamma = christoffel(m, p);
  auto x = jet_point(p, 1);
  const auto comps = field.eval(x);
  const TensorValue t = values_of(n, field.slots, comps);

  std::vector<Variance> slots = field.slots;
  slots.push_back(Variance::Down);
  const int rank = static_cast<int>(field.slots.size());
  TensorValue out = TensorValue(n, slots);

  std::vector<int> idx(rank), swapped(rank);
  for (std::size_t flat = 0; flat < comps.size(); ++flat) {
    std::size_t rem = flat;
    for (int s = rank - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(rem % n);
      rem /= n;
    }
    for (int i = 0; i < n; ++i) {
      double v = comps[flat].space() ? comps[flat].partial(i) : 0.0;
      for (int s = 0; s < rank; ++s) {
        swapped = idx;
        for (int mm = 0; mm < n; ++mm) {
          swapped[s] = mm;
          if (field.slots[s] == Variance::Up)
            v += gamma(idx[s], i, mm) * t.at(swapped);
          else
            v -= gamma(mm, i, idx[s]) * t.at(swapped);
        }
      }
      out.entries()[flat * n + i] = v;
    }
  }
  return out;
}

Vec lie_bracket(const TensorField& x, const TensorField& y, std::span<const double> p) {
  const int n = x.dims;
  auto pt = jet_point(p, 1);
  const auto xc = x.eval(pt);
  const auto yc = y.eval(pt);
  Vec out = Vec::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const double dy = yc[k].space() ? yc[k].partial(i) : 0.0;
      const double dx = xc[k].space() ? xc[k].partial(i) : 0.0;
      out(k) += xc[i].value() * dy - yc[i].value() * dx;
    }
  return out;
}

Vec apply_riemann(const TensorValue& r13, const Vec& x, const Vec& y, const Vec& z) {
  const int n = r13.dims();
  Vec out = Vec::Zero(n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i) {
      if (x(i) == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        if (y(j) == 0.0) continue;
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += r13(l, i, j, k) * z(k);
        out(l) += x(i) * y(j) * s;
      }
    }
  return out;
}

}  // namespace gssf

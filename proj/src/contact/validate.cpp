#include "gssf/contact/validate.hpp"

#include "gssf/tensor_core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gssf {

double GssfReport::residual(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.residual;
  throw Error("no residual named " + std::string(name));
}

std::vector<Vec> validation_frame(const ContactPoint& cp) {
  const int d = static_cast<int>(cp.g.rows());
  std::vector<Vec> frame;
  for (int i = 0; i < d; ++i) frame.push_back(Vec::Unit(d, i));
  frame.push_back(cp.xi);
  for (int i = 0; i < d; ++i) {
    Vec v = cp.phi * Vec::Unit(d, i);
    if (v.norm() > 0.1) {
      frame.push_back(v);
      break;
    }
  }
  return frame;
}

GssfReport validate_gssf(const ModelSpace& space, std::span<const double> p, double tol) {
  const auto& cs = space.structure;
  const auto& par = space.params;
  const int n = cs.n;
  const double k = par.f1_minus_f3();

  const ContactPoint cp = evaluate(cs, p);
  const CurvatureBundle cb = curvature_bundle(cs.metric, p);
  const TensorValue dphi = covariant_derivative(cs.phi, cs.metric, p);  // (l, j, i)
  const TensorValue dxi = covariant_derivative(cs.xi, cs.metric, p);    // (l, i)
  const auto frame = validation_frame(cp);
  const int d = cs.dim();

  auto vmax = [](const Vec& v) { return v.cwiseAbs().maxCoeff(); };

  double curv = 0, nphi = 0, nxi = 0, rxi = 0, xirxi = 0;
  for (const Vec& x : frame) {
    // (∇_X ξ) and (∇_X φ)Y
    Vec dx = Vec::Zero(d);
    for (int l = 0; l < d; ++l)
      for (int i = 0; i < d; ++i) dx(l) += dxi(l, i) * x(i);
    nxi = std::max(nxi, vmax(dx + k * (cp.phi * x)));
    xirxi = std::max(xirxi, vmax(apply_riemann(cb.riemann13, cp.xi, x, cp.xi) -
                                 k * (cp.eta.dot(x) * cp.xi - x)));
    for (const Vec& y : frame) {
      Vec dp = Vec::Zero(d);
      for (int l = 0; l < d; ++l)
        for (int j = 0; j < d; ++j)
          for (int i = 0; i < d; ++i) dp(l) += dphi(l, j, i) * x(i) * y(j);
      nphi = std::max(nphi, vmax(dp - k * (cp.inner(x, y) * cp.xi - cp.eta.dot(y) * x)));
      rxi = std::max(rxi, vmax(apply_riemann(cb.riemann13, x, y, cp.xi) -
                               k * (cp.eta.dot(y) * x - cp.eta.dot(x) * y)));
      for (const Vec& z : frame)
        curv = std::max(curv, vmax(apply_riemann(cb.riemann13, x, y, z) - gssf_ansatz(par, cp, x, y, z)));
    }
  }
  const Mat ric = cb.ricci.as_matrix();
  const double ricci = (ric - gssf_ricci(par, cp, n)).cwiseAbs().maxCoeff();
  const double sxx = std::abs(cp.xi.dot(ric * cp.xi) - 2.0 * n * k);

  GssfReport rep;
  rep.entries = {{"axioms", contact_axiom_residual(cp)},
                 {"curvature", curv},
                 {"nabla-phi", nphi},
                 {"nabla-xi", nxi},
                 {"ricci", ricci},
                 {"curvature-xi", rxi},
                 {"xi-curvature-xi", xirxi},
                 {"ricci-xi-xi", sxx}};
  for (const auto& e : rep.entries) rep.max_residual = std::max(rep.max_residual, e.residual);
  rep.pass = rep.max_residual < tol;
  return rep;
}

double phi_sectional_curvature(const ModelSpace& space, const Vec& x, std::span<const double> p) {
  const ContactPoint cp = evaluate(space.structure, p);
  const Vec px = cp.phi * x;
  const double xn = std::sqrt(cp.inner(x, x));
  if (std::sqrt(cp.inner(px, px)) < 1e-8 * std::max(xn, 1e-300))
    throw DegeneratePlaneError("X is parallel to xi; span{X, phi X} is degenerate");
  Vec u = x - cp.eta.dot(x) * cp.xi;
  u /= std::sqrt(cp.inner(u, u));
  const Vec v = cp.phi * u;
  const CurvatureBundle cb = curvature_bundle(space.structure.metric, p);
  double num = 0;
  const int d = space.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int w = 0; w < d; ++w) num += cb.riemann04(i, j, k, w) * u(i) * v(j) * v(k) * u(w);
  const double den = cp.inner(u, u) * cp.inner(v, v) - std::pow(cp.inner(u, v), 2);
  return num / den;
}

}  // namespace gssf

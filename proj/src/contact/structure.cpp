#include "gssf/contact/structure.hpp"

#include <algorithm>

namespace gssf {

ContactPoint evaluate(const ContactStructure& cs, std::span<const double> p) {
  ContactPoint cp;
  cp.g = cs.metric.at(p);
  cp.phi = cs.phi.at(p).as_matrix();
  cp.xi = cs.xi.at(p).as_vector();
  cp.eta = cs.eta.at(p).as_vector();
  return cp;
}

GssfParams sasakian_params(double c) {
  return {(c + 3.0) / 4.0, (c - 1.0) / 4.0, (c - 1.0) / 4.0};
}

Vec gssf_ansatz(const GssfParams& params, const ContactPoint& cp, const Vec& x, const Vec& y,
                const Vec& z) {
  const Vec phx = cp.phi * x, phy = cp.phi * y, phz = cp.phi * z;
  const double gyz = cp.inner(y, z), gxz = cp.inner(x, z);
  const double ex = cp.eta.dot(x), ey = cp.eta.dot(y), ez = cp.eta.dot(z);

  Vec out = params.f1 * (gyz * x - gxz * y);
  out += params.f2 * (cp.inner(x, phz) * phy - cp.inner(y, phz) * phx + 2.0 * cp.inner(x, phy) * phz);
  out += params.f3 * (ex * ez * y - ey * ez * x + gxz * ey * cp.xi - gyz * ex * cp.xi);
  return out;
}

Vec gssf_ansatz(const GssfParams& params, const ContactStructure& cs, const Vec& x, const Vec& y,
                const Vec& z, std::span<const double> p) {
  return gssf_ansatz(params, evaluate(cs, p), x, y, z);
}

Mat gssf_ricci(const GssfParams& params, const ContactPoint& cp, int n) {
  const double a = 2 * n * params.f1 + 3 * params.f2 - params.f3;
  const double b = 3 * params.f2 + (2 * n - 1) * params.f3;
  return a * cp.g - b * cp.eta * cp.eta.transpose();
}

double gssf_scalar(const GssfParams& params, int n) {
  return 2.0 * n * ((2 * n + 1) * params.f1 + 3 * params.f2 - 2 * params.f3);
}

double contact_axiom_residual(const ContactPoint& cp) {
  const int d = static_cast<int>(cp.g.rows());
  const Mat id = Mat::Identity(d, d);
  double r = std::abs(cp.eta.dot(cp.xi) - 1.0);
  r = std::max(r, (cp.phi * cp.phi - (-id + cp.xi * cp.eta.transpose())).cwiseAbs().maxCoeff());
  r = std::max(r, (cp.phi * cp.xi).cwiseAbs().maxCoeff());
  r = std::max(r, (cp.eta.transpose() * cp.phi).cwiseAbs().maxCoeff());
  r = std::max(r, (cp.phi.transpose() * cp.g * cp.phi - (cp.g - cp.eta * cp.eta.transpose()))
                      .cwiseAbs()
                      .maxCoeff());
  r = std::max(r, (cp.g * cp.xi - cp.eta).cwiseAbs().maxCoeff());
  return r;
}

}  // namespace gssf

#include "gssf/submanifold/geometry.hpp"

#include "gssf/tensor_core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gssf {

namespace {

using Jets = std::vector<ScalarJet>;

constexpr int kChartOrder = 3;
constexpr double kNormalAccept = 1e-3;

// Jet-level chart data shared by the geometric and synthetic providers.
struct ChartJets {
  int m = 0, p = 0;
  JetMatrix h;      // order >= 2
  Jets phi;         // φ^c_b at c*m+b, order >= 1
  Jets xi, eta;     // order >= 1
  Jets jn;          // J^α_β at α*p+β
  Jets omega;       // ω^α_{aβ} at (α*m+a)*p+β; empty for a flat normal bundle
  Jets sigma;       // σ^α_ab at (α*m+a)*m+b, order >= 1
  std::optional<EmbeddedFrame> frame;
};

double value(const ScalarJet& j) { return j.value(); }

Mat values(const Jets& a, int rows, int cols) {
  Mat out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = value(a[i * cols + j]);
  return out;
}

ScalarJet dot_g(const JetMatrix& g, const Jets& u, const Jets& v) {
  ScalarJet s(0.0);
  for (int a = 0; a < g.n; ++a) {
    if (u[a].value() == 0.0 && u[a].order() == 0) continue;
    ScalarJet gv(0.0);
    for (int b = 0; b < g.n; ++b) gv += g(a, b) * v[b];
    s += u[a] * gv;
  }
  return s;
}

// Ambient fields expanded at y0 and pulled back along Y(q).
struct AmbientAlongMap {
  JetMatrix g;  // order 3
  Jets gamma;   // Γ̃^A_BC at (A*D+B)*D+C, order 2
  Jets phi, xi, eta;
};

AmbientAlongMap pull_ambient(const ModelSpace& space, const Jets& y) {
  const int d = space.dim();
  std::vector<double> y0(d);
  for (int i = 0; i < d; ++i) y0[i] = y[i].value();
  const auto xt = jet_point(y0, kChartOrder);
  const JetMatrix gpoly = space.structure.metric.jets(xt);
  const Jets gam = christoffel_jets(gpoly);
  auto pull = [&](const Jets& poly) {
    Jets out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) out[i] = compose(poly[i], y);
    return out;
  };
  AmbientAlongMap a;
  a.g = JetMatrix(d);
  a.g.a = pull(gpoly.a);
  a.gamma = pull(gam);
  a.phi = pull(space.structure.phi.eval(xt));
  a.xi = pull(space.structure.xi.eval(xt));
  a.eta = pull(space.structure.eta.eval(xt));
  return a;
}

// ∇̃_{∂a} V for an ambient vector field V(q) along the map.
Jets ambient_derivative(const AmbientAlongMap& amb, const Jets& tangent_a, const Jets& v, int a) {
  const int d = amb.g.n;
  Jets out(d);
  for (int l = 0; l < d; ++l) {
    ScalarJet s = v[l].derivative(a);
    for (int i = 0; i < d; ++i) {
      if (tangent_a[i].value() == 0.0 && tangent_a[i].order() == 0) continue;
      for (int j = 0; j < d; ++j) s += amb.gamma[(l * d + i) * d + j] * tangent_a[i] * v[j];
    }
    out[l] = s;
  }
  return out;
}

ChartJets embedded_jets(const EmbeddingModel& e, std::span<const double> q) {
  const int m = e.m;
  const int d = e.ambient.dim();
  const auto x = jet_point(q, kChartOrder);
  Jets y = e.map(x);
  if (static_cast<int>(y.size()) != d) throw CatalogError("embedding map has the wrong arity");
  pin(y, *x[0].space());
  const AmbientAlongMap amb = pull_ambient(e.ambient, y);

  std::vector<Jets> tan(m, Jets(d));  // tan[b][A] = ∂_b Y^A, order 2
  for (int b = 0; b < m; ++b)
    for (int i = 0; i < d; ++i) tan[b][i] = y[i].derivative(b);

  ChartJets c;
  c.m = m;
  c.h = JetMatrix(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) c.h(a, b) = dot_g(amb.g, tan[a], tan[b]);
  const Mat hv = c.h.values();
  if (!hv.allFinite() || !is_positive_definite(hv) || symmetric_condition(hv) > 1e12)
    throw ImmersionError("Jacobian of '" + e.name + "' is rank deficient at the sample point");
  const JetMatrix hinv = inverse(c.h);

  // Tangential projection of an ambient vector: coefficients hinv Jᵀ g v.
  auto tangent_coeffs = [&](const Jets& v) {
    Jets gvj(m);
    for (int b = 0; b < m; ++b) gvj[b] = dot_g(amb.g, tan[b], v);
    Jets coeff(m, ScalarJet(0.0));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) coeff[a] += hinv(a, b) * gvj[b];
    return coeff;
  };

  // Normal frame: coordinate directions in index order, tangential part
  // removed, then modified Gram-Schmidt.
  std::vector<Jets> nor;
  for (int cand = 0; cand < d && static_cast<int>(nor.size()) < d - m; ++cand) {
    Jets v(d, ScalarJet(0.0));
    v[cand] = ScalarJet(1.0);
    pin(v, *y[0].space());
    const Jets tc = tangent_coeffs(v);
    for (int a = 0; a < m; ++a)
      for (int i = 0; i < d; ++i) v[i] -= tc[a] * tan[a][i];
    for (const Jets& nb : nor) {
      const ScalarJet proj = dot_g(amb.g, v, nb);
      for (int i = 0; i < d; ++i) v[i] -= proj * nb[i];
    }
    const ScalarJet len2 = dot_g(amb.g, v, v);
    if (len2.value() < kNormalAccept * kNormalAccept) continue;
    const ScalarJet inv_len = 1.0 / sqrt(len2);
    for (auto& vi : v) vi *= inv_len;
    nor.push_back(std::move(v));
  }
  const int p = d - m;
  if (static_cast<int>(nor.size()) != p) throw ImmersionError("could not complete the normal frame");
  c.p = p;

  // Gauss formula: ∇̃_a J_b = J Γ_ab + σ_ab.
  c.sigma.assign(p * m * m, ScalarJet(0.0));
  EmbeddedFrame f;
  const Jets gam_h = christoffel_jets(c.h);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Jets dj = ambient_derivative(amb, tan[a], tan[b], a);
      const Jets tc = tangent_coeffs(dj);
      Vec rest(d);
      for (int i = 0; i < d; ++i) rest(i) = dj[i].value();
      for (int k = 0; k < m; ++k) {
        f.connection = std::max(f.connection, std::abs(tc[k].value() - gam_h[(k * m + a) * m + b].value()));
        for (int i = 0; i < d; ++i) rest(i) -= tc[k].value() * tan[k][i].value();
      }
      for (int al = 0; al < p; ++al) {
        c.sigma[(al * m + a) * m + b] = dot_g(amb.g, dj, nor[al]);
        for (int i = 0; i < d; ++i) rest(i) -= c.sigma[(al * m + a) * m + b].value() * nor[al][i].value();
      }
      f.gauss_split = std::max(f.gauss_split, rest.cwiseAbs().maxCoeff());
    }

  // Normal connection and the Weingarten route.
  c.omega.assign(p * m * p, ScalarJet(0.0));
  f.weingarten.assign(p, Mat::Zero(m, m));
  for (int be = 0; be < p; ++be)
    for (int a = 0; a < m; ++a) {
      const Jets dn = ambient_derivative(amb, tan[a], nor[be], a);
      for (int al = 0; al < p; ++al) c.omega[(al * m + a) * p + be] = dot_g(amb.g, dn, nor[al]);
      const Jets tc = tangent_coeffs(dn);
      for (int k = 0; k < m; ++k) f.weingarten[be](k, a) = -tc[k].value();
    }

  // Contact data restricted to the tangent bundle.
  c.phi.assign(m * m, ScalarJet(0.0));
  for (int b = 0; b < m; ++b) {
    Jets pj(d, ScalarJet(0.0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) pj[i] += amb.phi[i * d + j] * tan[b][j];
    const Jets tc = tangent_coeffs(pj);
    for (int k = 0; k < m; ++k) c.phi[k * m + b] = tc[k];
  }
  c.xi = tangent_coeffs(amb.xi);
  c.eta.assign(m, ScalarJet(0.0));
  for (int b = 0; b < m; ++b)
    for (int i = 0; i < d; ++i) c.eta[b] += amb.eta[i] * tan[b][i];
  c.jn.assign(p * p, ScalarJet(0.0));
  for (int be = 0; be < p; ++be) {
    Jets pn(d, ScalarJet(0.0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) pn[i] += amb.phi[i * d + j] * nor[be][j];
    for (int al = 0; al < p; ++al) c.jn[al * p + be] = dot_g(amb.g, pn, nor[al]);
  }

  f.y = Vec(d);
  for (int i = 0; i < d; ++i) f.y(i) = y[i].value();
  f.g = amb.g.values();
  f.tangent = Mat(d, m);
  for (int b = 0; b < m; ++b)
    for (int i = 0; i < d; ++i) f.tangent(i, b) = tan[b][i].value();
  f.normal = Mat(d, p);
  for (int al = 0; al < p; ++al)
    for (int i = 0; i < d; ++i) f.normal(i, al) = nor[al][i].value();
  const Mat gram = f.normal.transpose() * f.g * f.normal - Mat::Identity(p, p);
  const Mat cross = f.tangent.transpose() * f.g * f.normal;
  f.frame = std::max(p ? gram.cwiseAbs().maxCoeff() : 0.0, p ? cross.cwiseAbs().maxCoeff() : 0.0);
  c.frame = std::move(f);
  return c;
}

// The model itself as the submanifold, with a flat rank-2 normal bundle
// carrying J = [[0, -1], [1, 0]].
ChartJets free_jets(const ModelSpace& space, std::span<const double> q) {
  const int m = space.dim();
  const auto x = jet_point(q, kChartOrder);
  ChartJets c;
  c.m = m;
  c.p = 2;
  c.h = space.structure.metric.jets(x);
  auto pinned = [&](Jets v) {
    pin(v, *x[0].space());
    return v;
  };
  c.phi = pinned(space.structure.phi.eval(x));
  c.xi = pinned(space.structure.xi.eval(x));
  c.eta = pinned(space.structure.eta.eval(x));
  c.jn = pinned({ScalarJet(0.0), ScalarJet(-1.0), ScalarJet(1.0), ScalarJet(0.0)});
  return c;
}

// Raw symmetric normal-valued quadratic form with seeded coefficients.
Jets raw_synthetic(std::uint64_t seed, int degree, int m, int p, JetPoint x) {
  UniformStream rng(seed * 0x9e3779b97f4a7c15ULL + 0x5851f42d4c957f2dULL);
  Jets s(p * m * m, ScalarJet(0.0));
  for (int al = 0; al < p; ++al)
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        ScalarJet v(rng.next(-1.0, 1.0));
        if (degree >= 1)
          for (int i = 0; i < m; ++i) v += rng.next(-1.0, 1.0) * x[i];
        if (degree >= 2)
          for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) v += 0.5 * rng.next(-1.0, 1.0) * x[i] * x[j];
        s[(al * m + a) * m + b] = v;
        s[(al * m + b) * m + a] = v;
      }
  pin(s, *x[0].space());
  return s;
}

// σ1(X,Y) = σ0(PX,PY) with P = I − ξ⊗η; σ1' = ½(σ1 − σ1(φ·,φ·));
// σ = ½(σ1'(X,Y) − J σ1'(X,φY)).
Jets project_invariant(const Jets& raw, const ChartJets& c) {
  const int m = c.m, p = c.p;
  auto idx = [m](int al, int a, int b) { return (al * m + a) * m + b; };
  Jets pm(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) pm[a * m + b] = ScalarJet(a == b ? 1.0 : 0.0) - c.xi[a] * c.eta[b];

  auto pull2 = [&](const Jets& s, const Jets& t) {  // s(T·, T·) for an m x m map T
    Jets half(p * m * m, ScalarJet(0.0)), out(p * m * m, ScalarJet(0.0));
    for (int al = 0; al < p; ++al)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int k = 0; k < m; ++k) half[idx(al, a, b)] += s[idx(al, k, b)] * t[k * m + a];
    for (int al = 0; al < p; ++al)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int k = 0; k < m; ++k) out[idx(al, a, b)] += half[idx(al, a, k)] * t[k * m + b];
    return out;
  };
  const Jets s1 = pull2(raw, pm);
  const Jets s1phi = pull2(s1, c.phi);
  Jets s1p(p * m * m);
  for (std::size_t i = 0; i < s1p.size(); ++i) s1p[i] = 0.5 * (s1[i] - s1phi[i]);

  Jets out(p * m * m, ScalarJet(0.0));
  for (int al = 0; al < p; ++al)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        ScalarJet turn(0.0);
        for (int be = 0; be < p; ++be)
          for (int k = 0; k < m; ++k) turn += c.jn[al * p + be] * s1p[idx(be, a, k)] * c.phi[k * m + b];
        out[idx(al, a, b)] = 0.5 * (s1p[idx(al, a, b)] - turn);
      }
  return out;
}

SigmaGeometry finish(const ChartJets& c, const ModelSpace& space) {
  const int m = c.m, p = c.p;
  SigmaGeometry s;
  s.m = m;
  s.p = p;
  s.n = (m - 1) / 2;
  s.params = space.params;
  s.ambient_n = space.n();

  const Jets gam = christoffel_jets(c.h);
  s.gamma = values_of(m, {Variance::Up, Variance::Down, Variance::Down}, gam);
  const CurvatureBundle cb = curvature_from_jets(c.h);
  s.riemann13 = cb.riemann13;
  s.ricci = cb.ricci.as_matrix();
  s.scalar = cb.scalar;
  s.h = c.h.values();
  s.hinv = inverse_symmetric(s.h);

  s.phi = values(c.phi, m, m);
  s.xi = values(c.xi, m, 1);
  s.eta = values(c.eta, m, 1);
  s.jn = values(c.jn, p, p);
  const TensorValue& gm = s.gamma;

  s.dphi = TensorValue(m, {Variance::Up, Variance::Down, Variance::Down});
  s.dxi = Mat::Zero(m, m);
  for (int cc = 0; cc < m; ++cc)
    for (int a = 0; a < m; ++a) {
      double dx = c.xi[cc].partial(a);
      for (int d = 0; d < m; ++d) dx += gm(cc, a, d) * s.xi(d);
      s.dxi(cc, a) = dx;
      for (int b = 0; b < m; ++b) {
        double v = c.phi[cc * m + b].partial(a);
        for (int d = 0; d < m; ++d) v += gm(cc, a, d) * s.phi(d, b) - gm(d, a, b) * s.phi(cc, d);
        s.dphi(cc, b, a) = v;
      }
    }

  auto sidx = [m](int al, int a, int b) { return (al * m + a) * m + b; };
  auto oidx = [m, p](int al, int a, int be) { return (al * m + a) * p + be; };
  s.sigma.assign(p * m * m, 0.0);
  for (std::size_t i = 0; i < s.sigma.size(); ++i) s.sigma[i] = c.sigma[i].value();

  s.nabla_sigma.assign(p * m * m * m, 0.0);
  for (int al = 0; al < p; ++al)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int cc = 0; cc < m; ++cc) {
          double v = c.sigma[sidx(al, b, cc)].partial(a);
          if (!c.omega.empty())
            for (int be = 0; be < p; ++be) v += c.omega[oidx(al, a, be)].value() * s.sigma[sidx(be, b, cc)];
          for (int d = 0; d < m; ++d)
            v -= gm(d, a, b) * s.sigma[sidx(al, d, cc)] + gm(d, a, cc) * s.sigma[sidx(al, b, d)];
          s.nabla_sigma[((al * m + a) * m + b) * m + cc] = v;
        }

  // R⊥^α_{β ab} = ∂a ω^α_{bβ} − ∂b ω^α_{aβ} + ω^α_{aγ} ω^γ_{bβ} − ω^α_{bγ} ω^γ_{aβ}
  s.rperp.assign(p * p * m * m, 0.0);
  if (!c.omega.empty())
    for (int al = 0; al < p; ++al)
      for (int be = 0; be < p; ++be)
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            double v = c.omega[oidx(al, b, be)].partial(a) - c.omega[oidx(al, a, be)].partial(b);
            for (int ga = 0; ga < p; ++ga)
              v += c.omega[oidx(al, a, ga)].value() * c.omega[oidx(ga, b, be)].value() -
                   c.omega[oidx(al, b, ga)].value() * c.omega[oidx(ga, a, be)].value();
            s.rperp[((al * p + be) * m + a) * m + b] = v;
          }
  s.embedded = c.frame;
  return s;
}

double ambient_scalar_at(const ModelSpace& space, const Vec& y) {
  return curvature_bundle(space.structure.metric, std::span<const double>(y.data(), y.size())).scalar;
}

}  // namespace

Vec SigmaGeometry::sigma_of(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(p);
  for (int al = 0; al < p; ++al)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) out(al) += sigma[(al * m + a) * m + b] * x(a) * y(b);
  return out;
}

Vec SigmaGeometry::nabla_sigma_of(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out = Vec::Zero(p);
  for (int al = 0; al < p; ++al)
    for (int a = 0; a < m; ++a) {
      if (x(a) == 0.0) continue;
      for (int b = 0; b < m; ++b) {
        if (y(b) == 0.0) continue;
        for (int c = 0; c < m; ++c)
          out(al) += nabla_sigma[((al * m + a) * m + b) * m + c] * x(a) * y(b) * z(c);
      }
    }
  return out;
}

Vec SigmaGeometry::rperp_of(const Vec& x, const Vec& y, const Vec& nu) const {
  Vec out = Vec::Zero(p);
  for (int al = 0; al < p; ++al)
    for (int be = 0; be < p; ++be)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) out(al) += rperp[((al * p + be) * m + a) * m + b] * x(a) * y(b) * nu(be);
  return out;
}

Vec SigmaGeometry::curvature(const Vec& x, const Vec& y, const Vec& z) const {
  return apply_riemann(riemann13, x, y, z);
}

double SigmaGeometry::sigma_norm() const {
  double r = 0;
  for (double v : sigma) r = std::max(r, std::abs(v));
  return r;
}

SigmaGeometry SigmaField::at(std::span<const double> q) const {
  if (provider == Provider::Geometric) {
    if (!embedding) throw PreconditionError("geometric sigma needs an embedding");
    SigmaGeometry s = finish(embedded_jets(*embedding, q), space);
    s.ambient_scalar = ambient_scalar_at(space, s.embedded->y);
    return s;
  }
  ChartJets c = embedding ? embedded_jets(*embedding, q) : free_jets(space, q);
  const auto x = jet_point(q, kChartOrder);
  const Jets raw = raw_synthetic(seed, degree, c.m, c.p, x);
  c.sigma = project_invariant(raw, c);
  SigmaGeometry s = finish(c, space);
  s.raw_sigma.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) s.raw_sigma[i] = raw[i].value();
  if (s.embedded)
    s.ambient_scalar = ambient_scalar_at(space, s.embedded->y);
  else
    s.ambient_scalar = s.scalar;
  return s;
}

SigmaField geometric_sigma(const EmbeddingModel& e) {
  SigmaField s;
  s.provider = SigmaField::Provider::Geometric;
  s.space = e.ambient;
  s.embedding = e;
  return s;
}

SigmaField synth_sigma(std::uint64_t seed, const ModelSpace& space, std::optional<EmbeddingModel> attach,
                       int degree) {
  SigmaField s;
  s.provider = SigmaField::Provider::Synthetic;
  s.space = space;
  s.embedding = std::move(attach);
  s.seed = seed;
  s.degree = degree;
  return s;
}

TensorValue induced_metric(const EmbeddingModel& e, std::span<const double> q) {
  const auto x = jet_point(q, 1);
  Jets y = e.map(x);
  pin(y, *x[0].space());
  std::vector<double> y0(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) y0[i] = y[i].value();
  const Mat g = e.ambient.structure.metric.at(y0);
  Mat jac(y.size(), e.m);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (int b = 0; b < e.m; ++b) jac(i, b) = y[i].partial(b);
  const Mat h = jac.transpose() * g * jac;
  if (!h.allFinite() || !is_positive_definite(h) || symmetric_condition(h) > 1e12)
    throw ImmersionError("Jacobian of '" + e.name + "' is rank deficient at the sample point");
  return TensorValue::bilinear(h);
}

std::vector<Mat> second_fundamental_form(const EmbeddingModel& e, std::span<const double> q) {
  const SigmaGeometry s = geometric_sigma(e).at(q);
  const int d = e.ambient.dim();
  std::vector<Mat> out(d, Mat::Zero(e.m, e.m));
  for (int i = 0; i < d; ++i)
    for (int al = 0; al < s.p; ++al)
      for (int a = 0; a < s.m; ++a)
        for (int b = 0; b < s.m; ++b)
          out[i](a, b) += s.sigma[(al * s.m + a) * s.m + b] * s.embedded->normal(i, al);
  return out;
}

Mat shape_operator(const EmbeddingModel& e, const Vec& normal, std::span<const double> q) {
  const SigmaGeometry s = geometric_sigma(e).at(q);
  const EmbeddedFrame& f = *s.embedded;
  const Vec tang = s.hinv * (f.tangent.transpose() * f.g * normal);
  if (tang.cwiseAbs().maxCoeff() > 1e-8) throw InvalidNormalError("vector has a tangential component");
  const Vec coeff = f.normal.transpose() * f.g * normal;
  Mat a = Mat::Zero(s.m, s.m);
  for (int al = 0; al < s.p; ++al) a += coeff(al) * f.weingarten[al];
  return a;
}

Vec nabla_sigma(const SigmaField& s, const Vec& x, const Vec& y, const Vec& z, std::span<const double> q) {
  return s.at(q).nabla_sigma_of(x, y, z);
}

InvarianceReport check_invariant(const EmbeddingModel& e, std::span<const double> q) {
  const auto y = e.image(q);
  const ContactPoint cp = evaluate(e.ambient.structure, y);
  const auto x = jet_point(q, 1);
  Jets yj = e.map(x);
  pin(yj, *x[0].space());
  const int d = e.ambient.dim();
  Mat jac(d, e.m);
  for (int i = 0; i < d; ++i)
    for (int b = 0; b < e.m; ++b) jac(i, b) = yj[i].partial(b);
  const Mat h = jac.transpose() * cp.g * jac;
  auto normal_part = [&](const Vec& v) {
    const Vec t = jac * h.ldlt().solve(jac.transpose() * cp.g * v);
    return (v - t).cwiseAbs().maxCoeff();
  };
  InvarianceReport r;
  r.xi_normal = normal_part(cp.xi);
  for (int b = 0; b < e.m; ++b) r.phi_normal = std::max(r.phi_normal, normal_part(cp.phi * jac.col(b)));
  r.invariant = r.xi_normal < 1e-8 && r.phi_normal < 1e-8;
  return r;
}

double InvariantIdentityReport::residual(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.residual;
  throw Error("no residual named " + std::string(name));
}

InvariantIdentityReport invariant_identities(const SigmaField& field, std::span<const double> q, double tol) {
  if (field.embedding) {
    const InvarianceReport inv = check_invariant(*field.embedding, q);
    if (!inv.invariant)
      throw PreconditionError("'" + field.embedding->name + "' is not invariant at the sample point");
  }
  const SigmaGeometry s = field.at(q);
  const int m = s.m;
  const double k = s.params.f1_minus_f3();
  auto vmax = [](const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; };

  double nphi = 0, nxi = 0, rxi = 0, sxi = 0, sphi = 0, sigxi = 0;
  for (int a = 0; a < m; ++a) {
    const Vec x = Vec::Unit(m, a);
    Vec dx = s.dxi.col(a);
    nxi = std::max(nxi, vmax(dx + k * (s.phi * x)));
    rxi = std::max(rxi, vmax(s.curvature(s.xi, x, s.xi) - k * (s.eta.dot(x) * s.xi - x)));
    sxi = std::max(sxi, std::abs(s.ricci_of(x, s.xi) - 2.0 * s.n * k * s.eta.dot(x)));
    sigxi = std::max(sigxi, vmax(s.sigma_of(x, s.xi)));
    if (s.embedded)
      for (int al = 0; al < s.p; ++al)
        sigxi = std::max(sigxi, std::abs(s.inner(s.embedded->weingarten[al] * x, s.xi)));
    for (int b = 0; b < m; ++b) {
      const Vec y = Vec::Unit(m, b);
      Vec dp(m);
      for (int c = 0; c < m; ++c) dp(c) = s.dphi(c, b, a);
      nphi = std::max(nphi, vmax(dp - k * (s.inner(x, y) * s.xi - s.eta.dot(y) * x)));
      sphi = std::max(sphi, vmax(s.sigma_of(x, s.phi * y) - s.jn * s.sigma_of(x, y)));
    }
  }
  InvariantIdentityReport r;
  r.entries = {{"nabla-phi", nphi}, {"nabla-xi", nxi},     {"xi-curvature-xi", rxi},
               {"ricci-xi", sxi},   {"sigma-phi", sphi},   {"sigma-xi", sigxi}};
  for (const auto& e : r.entries) r.max_residual = std::max(r.max_residual, e.residual);
  r.pass = r.max_residual < tol;
  return r;
}

InvariantIdentityReport invariant_identities(const EmbeddingModel& e, std::span<const double> q, double tol) {
  return invariant_identities(geometric_sigma(e), q, tol);
}

bool is_totally_geodesic(const EmbeddingModel& e, int samples, double tol, std::uint64_t seed) {
  const SigmaField f = geometric_sigma(e);
  for (const auto& q : sample_points(e.box, samples, seed))
    if (f.at(q).sigma_norm() >= tol) return false;
  return true;
}

}  // namespace gssf

#include "gssf/tensor_core/linalg.hpp"

#include "gssf/tensor_core/errors.hpp"

#include <cmath>
#include <limits>

namespace gssf {

double symmetric_condition(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  const Vec ev = es.eigenvalues().cwiseAbs();
  const double lo = ev.minCoeff();
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return ev.maxCoeff() / lo;
}

Mat inverse_symmetric(const Mat& m) {
  const double cond = symmetric_condition(m);
  if (!std::isfinite(cond) || cond > 1e12)
    throw NumericInversionError("metric is singular to working precision", cond);
  return m.inverse();
}

bool is_positive_definite(const Mat& m) {
  Eigen::LDLT<Mat> ldlt(m);
  if (ldlt.info() != Eigen::Success) return false;
  return (ldlt.vectorD().array() > 0.0).all();
}

Mat JetMatrix::values() const {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (*this)(i, j).value();
  return m;
}

namespace {

JetMatrix multiply(const JetMatrix& x, const JetMatrix& y) {
  JetMatrix out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const ScalarJet& xik = x(i, k);
      for (int j = 0; j < x.n; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

}  // namespace

JetMatrix inverse(const JetMatrix& m) {
  const Mat b = inverse_symmetric(m.values());
  const JetSpace* space = nullptr;
  for (const auto& e : m.a)
    if (e.space() && (!space || e.order() < space->order())) space = e.space();
  const int order = space ? space->order() : 0;
  JetMatrix bj(m.n), step(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      bj(i, j) = ScalarJet(b(i, j));
      ScalarJet h = m(i, j);
      h -= h.value();
      step(i, j) = h;
    }
  // step = -B H
  JetMatrix bh(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int k = 0; k < m.n; ++k)
      for (int j = 0; j < m.n; ++j) bh(i, j) += step(k, j) * (-b(i, k));

  JetMatrix out = bj;
  JetMatrix term = bj;
  for (int k = 1; k <= order; ++k) {
    term = multiply(bh, term);
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += term.a[i];
  }
  // Pin every entry to the input's jet space.
  if (space) pin(out.a, *space);
  return out;
}

}  // namespace gssf

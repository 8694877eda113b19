#pragma once

#include "gssf/tensor_core/jet.hpp"
#include "gssf/tensor_core/tensor.hpp"

#include <vector>

namespace gssf {

/// Condition number (2-norm) of a symmetric matrix.
double symmetric_condition(const Mat& m);

/// Inverse of a symmetric matrix; throws NumericInversionError when it is
/// singular to working precision.
Mat inverse_symmetric(const Mat& m);

/// True when the symmetric matrix factors as L D L^T (pivoted) with D > 0.
bool is_positive_definite(const Mat& m);

/// Row-major square matrix of jets.
struct JetMatrix {
  int n = 0;
  std::vector<ScalarJet> a;

  JetMatrix() = default;
  explicit JetMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
  ScalarJet& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const ScalarJet& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  Mat values() const;
};

/// Inverse by Neumann series around the value: A^{-1} = sum_k (-B H)^k B,
/// B = A(p)^{-1}, H = A - A(p).
JetMatrix inverse(const JetMatrix& m);

}  // namespace gssf

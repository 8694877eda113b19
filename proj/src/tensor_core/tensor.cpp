#include "gssf/tensor_core/tensor.hpp"

#include "gssf/tensor_core/errors.hpp"
#include "gssf/tensor_core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gssf {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// Decodes a flat offset into per-slot indices.
void decode(std::size_t flat, int dims, int rank, std::vector<int>& idx) {
  idx.resize(rank);
  for (int s = rank - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(flat % dims);
    flat /= dims;
  }
}

}  // namespace

TensorValue::TensorValue(int dims, std::vector<Variance> slots)
    : dims_(dims), slots_(std::move(slots)),
      entries_(ipow(dims, static_cast<int>(slots_.size())), 0.0) {
  if (dims <= 0) throw Error("tensor dimension must be positive");
}

TensorValue TensorValue::scalar(double v) {
  TensorValue t;
  t.dims_ = 1;
  t.entries_ = {v};
  return t;
}

TensorValue TensorValue::vector(const Vec& v) {
  TensorValue t(static_cast<int>(v.size()), {Variance::Up});
  std::copy(v.data(), v.data() + v.size(), t.entries_.begin());
  return t;
}

TensorValue TensorValue::covector(const Vec& v) {
  TensorValue t(static_cast<int>(v.size()), {Variance::Down});
  std::copy(v.data(), v.data() + v.size(), t.entries_.begin());
  return t;
}

TensorValue TensorValue::endomorphism(const Mat& m) {
  TensorValue t(static_cast<int>(m.rows()), {Variance::Up, Variance::Down});
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
  return t;
}

TensorValue TensorValue::bilinear(const Mat& m) {
  TensorValue t(static_cast<int>(m.rows()), {Variance::Down, Variance::Down});
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
  return t;
}

TensorValue TensorValue::identity(int dims) {
  return endomorphism(Mat::Identity(dims, dims));
}

std::size_t TensorValue::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank())
    throw Error("tensor index count " + std::to_string(idx.size()) + " != rank " +
                std::to_string(rank()));
  std::size_t off = 0;
  for (int i : idx) off = off * dims_ + static_cast<std::size_t>(i);
  return off;
}

Vec TensorValue::as_vector() const {
  if (rank() != 1) throw Error("as_vector on rank " + std::to_string(rank()));
  return Eigen::Map<const Vec>(entries_.data(), dims_);
}

Mat TensorValue::as_matrix() const {
  if (rank() != 2) throw Error("as_matrix on rank " + std::to_string(rank()));
  Mat m(dims_, dims_);
  for (int i = 0; i < dims_; ++i)
    for (int j = 0; j < dims_; ++j) m(i, j) = entries_[i * dims_ + j];
  return m;
}

void TensorValue::check_compatible(const TensorValue& o) const {
  if (dims_ != o.dims_ || slots_ != o.slots_) throw Error("tensor shapes differ");
}

TensorValue& TensorValue::operator+=(const TensorValue& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

TensorValue& TensorValue::operator-=(const TensorValue& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

TensorValue& TensorValue::operator*=(double s) {
  for (double& e : entries_) e *= s;
  return *this;
}

double TensorValue::max_abs() const {
  double m = 0.0;
  for (double e : entries_) m = std::max(m, std::abs(e));
  return m;
}

TensorValue contract(const TensorValue& t, int slot_a, int slot_b) {
  const int rank = t.rank();
  if (slot_a < 0 || slot_b < 0 || slot_a >= rank || slot_b >= rank)
    throw VarianceMismatchError("contraction slot out of range");
  if (slot_a == slot_b) throw VarianceMismatchError("cannot contract a slot with itself");
  if (t.slots()[slot_a] == t.slots()[slot_b])
    throw VarianceMismatchError("contraction requires one up and one down slot");

  std::vector<Variance> rest;
  for (int s = 0; s < rank; ++s)
    if (s != slot_a && s != slot_b) rest.push_back(t.slots()[s]);
  const int n = t.dims();
  TensorValue out = rest.empty() ? TensorValue::scalar(0.0) : TensorValue(n, rest);
  std::vector<int> idx;
  for (std::size_t flat = 0; flat < t.entries().size(); ++flat) {
    decode(flat, n, rank, idx);
    if (idx[slot_a] != idx[slot_b]) continue;
    std::size_t off = 0;
    for (int s = 0; s < rank; ++s)
      if (s != slot_a && s != slot_b) off = off * n + idx[s];
    out.entries()[off] += t.entries()[flat];
  }
  return out;
}

TensorValue tensor_product(const TensorValue& a, const TensorValue& b) {
  if (a.rank() == 0 || b.rank() == 0) {
    const TensorValue& s = a.rank() == 0 ? a : b;
    TensorValue out = a.rank() == 0 ? b : a;
    return out *= s.entries()[0];
  }
  if (a.dims() != b.dims()) throw Error("tensor product of different dimensions");
  std::vector<Variance> slots = a.slots();
  slots.insert(slots.end(), b.slots().begin(), b.slots().end());
  TensorValue out(a.dims(), slots);
  const std::size_t nb = b.entries().size();
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    for (std::size_t j = 0; j < nb; ++j)
      out.entries()[i * nb + j] = a.entries()[i] * b.entries()[j];
  return out;
}

TensorValue contract(const TensorValue& a, int slot_a, const TensorValue& b, int slot_b) {
  return contract(tensor_product(a, b), slot_a, a.rank() + slot_b);
}

TensorValue metric_adjust(const TensorValue& t, int slot, const TensorValue& g,
                          IndexDirection direction) {
  if (slot < 0 || slot >= t.rank()) throw VarianceMismatchError("metric_adjust slot out of range");
  if (g.rank() != 2 || g.slots()[0] != Variance::Down || g.slots()[1] != Variance::Down)
    throw VarianceMismatchError("metric_adjust expects a (0,2) metric");
  const Variance want = direction == IndexDirection::Up ? Variance::Down : Variance::Up;
  if (t.slots()[slot] != want)
    throw VarianceMismatchError("slot variance already matches the requested direction");

  Mat m = g.as_matrix();
  Mat use = direction == IndexDirection::Down ? m : inverse_symmetric(m);
  const int n = t.dims();
  std::vector<Variance> slots = t.slots();
  slots[slot] = direction == IndexDirection::Up ? Variance::Up : Variance::Down;
  TensorValue out(n, slots);
  std::vector<int> idx;
  const int rank = t.rank();
  std::size_t stride = 1;
  for (int s = rank - 1; s > slot; --s) stride *= n;
  for (std::size_t flat = 0; flat < t.entries().size(); ++flat) {
    decode(flat, n, rank, idx);
    const int i = idx[slot];
    const std::size_t base = flat - static_cast<std::size_t>(i) * stride;
    for (int k = 0; k < n; ++k) out.entries()[base + k * stride] += use(k, i) * t.entries()[flat];
  }
  return out;
}

}  // namespace gssf

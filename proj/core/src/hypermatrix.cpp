#include "tubal/hypermatrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tubal/fft.hpp"

namespace tubal {

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty())
    throw std::invalid_argument("Shape: at least one mode required");
  for (std::size_t d : dims_) {
    if (d == 0)
      throw std::invalid_argument("Shape: every extent must be >= 1");
    count_ *= d;
  }
}

std::size_t Shape::linear_index(std::span<const std::size_t> idx) const {
  if (idx.size() != dims_.size())
    throw std::out_of_range("linear_index: index order does not match shape order");
  std::size_t lin = 0;
  std::size_t stride = 1;
  for (std::size_t m = 0; m < dims_.size(); ++m) {
    if (idx[m] >= dims_[m])
      throw std::out_of_range("linear_index: index out of range in mode " + std::to_string(m));
    lin += idx[m] * stride;
    stride *= dims_[m];
  }
  return lin;
}

std::vector<std::size_t> Shape::multi_index(std::size_t lin) const {
  if (lin >= count_)
    throw std::out_of_range("multi_index: linear index out of range");
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t m = 0; m < dims_.size(); ++m) {
    idx[m] = lin % dims_[m];
    lin /= dims_[m];
  }
  return idx;
}

Shape Shape::prefix(std::size_t cut) const {
  return Shape(std::vector<std::size_t>(dims_.begin(), dims_.begin() + cut));
}

Shape Shape::suffix(std::size_t cut) const {
  return Shape(std::vector<std::size_t>(dims_.begin() + cut, dims_.end()));
}

std::string Shape::to_string() const {
  std::ostringstream os;
  for (std::size_t m = 0; m < dims_.size(); ++m)
    os << (m ? "x" : "") << dims_[m];
  return os.str();
}

Hypermatrix::Hypermatrix(Shape shape) : shape_(std::move(shape)), data_(shape_.count()) {}

Hypermatrix::Hypermatrix(Shape shape, std::vector<Complex> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != shape_.count())
    throw dimension_error("Hypermatrix: data length does not match shape count");
}

Complex& Hypermatrix::at(std::span<const std::size_t> idx) {
  return data_[shape_.linear_index(idx)];
}

const Complex& Hypermatrix::at(std::span<const std::size_t> idx) const {
  return data_[shape_.linear_index(idx)];
}

Hypermatrix& Hypermatrix::operator+=(const Hypermatrix& other) {
  if (shape_ != other.shape_)
    throw dimension_error("Hypermatrix +=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += other.data_[i];
  return *this;
}

Hypermatrix& Hypermatrix::operator-=(const Hypermatrix& other) {
  if (shape_ != other.shape_)
    throw dimension_error("Hypermatrix -=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= other.data_[i];
  return *this;
}

Hypermatrix& Hypermatrix::operator*=(Complex factor) {
  for (auto& v : data_)
    v *= factor;
  return *this;
}

Hypermatrix operator+(Hypermatrix lhs, const Hypermatrix& rhs) { return lhs += rhs; }
Hypermatrix operator-(Hypermatrix lhs, const Hypermatrix& rhs) { return lhs -= rhs; }
Hypermatrix operator*(Complex factor, Hypermatrix a) { return a *= factor; }

Hypermatrix conj(const Hypermatrix& a) {
  Hypermatrix out(a.shape());
  auto src = a.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = std::conj(src[i]);
  return out;
}

Complex frobenius_inner(const Hypermatrix& a, const Hypermatrix& b) {
  if (a.shape() != b.shape())
    throw dimension_error("frobenius_inner: shape mismatch");
  Complex acc(0.0, 0.0);
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i)
    acc += std::conj(db[i]) * da[i];
  return acc;
}

double frobenius_norm(const Hypermatrix& a) {
  double acc = 0.0;
  for (const Complex& v : a.data())
    acc += std::norm(v);
  return std::sqrt(acc);
}

std::size_t slice_count(const Hypermatrix& a) {
  return a.shape().count() / a.shape()[a.order() - 1];
}

Hypermatrix frontal_slice(const Hypermatrix& a, std::size_t l) {
  if (a.order() < 2)
    throw std::invalid_argument("frontal_slice: input must have order >= 2");
  const std::size_t p = a.shape()[a.order() - 1];
  if (l >= p)
    throw std::out_of_range("frontal_slice: slice index out of range");
  const std::size_t stride = slice_count(a);
  Shape sliced = a.shape().prefix(a.order() - 1);
  std::vector<Complex> data(a.data().begin() + l * stride, a.data().begin() + (l + 1) * stride);
  return Hypermatrix(std::move(sliced), std::move(data));
}

Eigen::VectorXcd tube(const Hypermatrix& a, std::span<const std::size_t> idx) {
  if (idx.size() + 1 != a.order())
    throw std::out_of_range("tube: index order must be tensor order minus one");
  const std::size_t p = a.shape()[a.order() - 1];
  const std::size_t stride = slice_count(a);
  const Shape lead = a.shape().prefix(a.order() - 1);
  const std::size_t base = lead.linear_index(idx);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(p));
  for (std::size_t l = 0; l < p; ++l)
    out[static_cast<Eigen::Index>(l)] = a[base + l * stride];
  return out;
}

Hypermatrix permute_modes(const Hypermatrix& a, std::span<const std::size_t> perm) {
  const std::size_t d = a.order();
  if (perm.size() != d)
    throw std::invalid_argument("permute_modes: permutation length mismatch");
  std::vector<bool> seen(d, false);
  for (std::size_t m : perm) {
    if (m >= d || seen[m])
      throw std::invalid_argument("permute_modes: not a permutation");
    seen[m] = true;
  }
  std::vector<std::size_t> newdims(d);
  for (std::size_t m = 0; m < d; ++m)
    newdims[m] = a.shape()[perm[m]];
  Hypermatrix out(Shape(std::move(newdims)));

  std::vector<std::size_t> src(d, 0);
  std::vector<std::size_t> dst(d);
  for (std::size_t lin = 0; lin < a.size(); ++lin) {
    for (std::size_t m = 0; m < d; ++m)
      dst[m] = src[perm[m]];
    out[out.shape().linear_index(dst)] = a[lin];
    for (std::size_t m = 0; m < d; ++m) {
      if (++src[m] < a.shape()[m])
        break;
      src[m] = 0;
    }
  }
  return out;
}

Eigen::Map<const Eigen::MatrixXcd> slice_matrix(const Hypermatrix& a, std::size_t l,
                                                Eigen::Index rows, Eigen::Index cols) {
  const std::size_t stride = slice_count(a);
  return Eigen::Map<const Eigen::MatrixXcd>(a.data().data() + l * stride, rows, cols);
}

Eigen::Map<Eigen::MatrixXcd> slice_matrix(Hypermatrix& a, std::size_t l, Eigen::Index rows,
                                          Eigen::Index cols) {
  const std::size_t stride = slice_count(a);
  return Eigen::Map<Eigen::MatrixXcd>(a.data().data() + l * stride, rows, cols);
}

TubalDims tubal_dims(const Shape& shape) {
  const std::size_t order = shape.order();
  if (order < 3 || order % 2 == 0)
    throw dimension_error("TubalTensor: order must be odd and >= 3, got " +
                          std::to_string(order));
  const std::size_t k = (order - 1) / 2;
  const std::size_t n = shape[0];
  for (std::size_t m = 0; m < 2 * k; ++m)
    if (shape[m] != n)
      throw dimension_error("TubalTensor: first 2k modes must share one side length");
  return TubalDims{k, n, shape[order - 1]};
}

TubalTensor::TubalTensor(Hypermatrix spatial, Hypermatrix frequency)
    : spatial_(std::move(spatial)), frequency_(std::move(frequency)) {
  const TubalDims dims = tubal_dims(spatial_.shape());
  k_ = dims.k;
  n_ = dims.n;
  p_ = dims.p;
  nk_ = 1;
  for (std::size_t i = 0; i < k_; ++i)
    nk_ *= n_;
}

TubalTensor TubalTensor::from_spatial(Hypermatrix spatial) {
  tubal_dims(spatial.shape());
  Hypermatrix freq = fft_tubal(spatial);
  return TubalTensor(std::move(spatial), std::move(freq));
}

TubalTensor TubalTensor::from_frequency(Hypermatrix frequency) {
  tubal_dims(frequency.shape());
  Hypermatrix spatial = ifft_tubal(frequency);
  return TubalTensor(std::move(spatial), std::move(frequency));
}

Eigen::Map<const Eigen::MatrixXcd> TubalTensor::slice_matricization(std::size_t l) const {
  if (l >= p_)
    throw std::out_of_range("slice_matricization: slice index out of range");
  return slice_matrix(frequency_, l, static_cast<Eigen::Index>(nk_),
                      static_cast<Eigen::Index>(nk_));
}

} // namespace tubal

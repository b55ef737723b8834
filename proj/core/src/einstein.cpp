#include "tubal/einstein.hpp"

#include "tubal/matricize.hpp"

namespace tubal {

namespace {

void require_same_algebra(const TubalTensor& a, const TubalTensor& b) {
  if (a.n() != b.n() || a.p() != b.p() || a.k() != b.k())
    throw dimension_error("t-Einstein product: operands must share (n, p, k)");
}

} // namespace

Hypermatrix einstein_product(const Hypermatrix& a, const Hypermatrix& b,
                             std::size_t contracted) {
  if (contracted == 0 || contracted >= a.order() || contracted >= b.order())
    throw dimension_error("einstein_product: contracted mode count out of range");
  const std::size_t split_a = a.order() - contracted;
  for (std::size_t m = 0; m < contracted; ++m)
    if (a.shape()[split_a + m] != b.shape()[m])
      throw dimension_error("einstein_product: contracted extents do not agree");

  const Eigen::MatrixXcd prod = matricize(a, split_a) * matricize(b, contracted);
  return dematricize(prod, a.shape().prefix(split_a), b.shape().suffix(contracted));
}

TubalTensor t_einstein(const TubalTensor& a, const TubalTensor& b) {
  require_same_algebra(a, b);
  const std::size_t p = a.p();
  Hypermatrix chat(a.frequency().shape());
  const auto nk = static_cast<Eigen::Index>(a.nk());
  for (std::size_t l = 0; l < p; ++l)
    slice_matrix(chat, l, nk, nk) = a.slice_matricization(l) * b.slice_matricization(l);
  return TubalTensor::from_frequency(std::move(chat));
}

TubalTensor gen_t_conj_transpose(const TubalTensor& a) {
  Hypermatrix out(a.frequency().shape());
  const auto nk = static_cast<Eigen::Index>(a.nk());
  for (std::size_t l = 0; l < a.p(); ++l)
    slice_matrix(out, l, nk, nk) = a.slice_matricization(l).adjoint();
  return TubalTensor::from_frequency(std::move(out));
}

TubalTensor t_identity_k(std::size_t n, std::size_t p, std::size_t k) {
  std::vector<std::size_t> dims(2 * k + 1, n);
  dims[2 * k] = p;
  Hypermatrix spatial((Shape(dims)));
  std::size_t nk = 1;
  for (std::size_t m = 0; m < k; ++m)
    nk *= n;
  // slice 0 carries the Kronecker-delta tensor; diag of its matricization
  const std::size_t row_stride = nk;
  for (std::size_t i = 0; i < nk; ++i)
    spatial[i + i * row_stride] = 1.0;
  return TubalTensor::from_spatial(std::move(spatial));
}

SliceMatrixFamily phi(const TubalTensor& a) {
  SliceMatrixFamily fam;
  fam.n = a.n();
  fam.k = a.k();
  fam.matrices.reserve(a.p());
  for (std::size_t l = 0; l < a.p(); ++l)
    fam.matrices.emplace_back(a.slice_matricization(l));
  return fam;
}

TubalTensor phi_inv(const SliceMatrixFamily& family, std::size_t n, std::size_t k) {
  std::size_t nk = 1;
  for (std::size_t m = 0; m < k; ++m)
    nk *= n;
  const std::size_t p = family.matrices.size();
  if (p == 0)
    throw dimension_error("phi_inv: empty slice family");
  std::vector<std::size_t> dims(2 * k + 1, n);
  dims[2 * k] = p;
  Hypermatrix freq((Shape(dims)));
  for (std::size_t l = 0; l < p; ++l) {
    const auto& m = family.matrices[l];
    if (static_cast<std::size_t>(m.rows()) != nk || static_cast<std::size_t>(m.cols()) != nk)
      throw dimension_error("phi_inv: slice " + std::to_string(l) + " is not n^k x n^k");
    slice_matrix(freq, l, static_cast<Eigen::Index>(nk), static_cast<Eigen::Index>(nk)) = m;
  }
  return TubalTensor::from_frequency(std::move(freq));
}

TubalTensor t_power_integer(const TubalTensor& a, std::size_t e) {
  if (e == 0)
    throw std::invalid_argument("t_power_integer: exponent must be >= 1");
  Hypermatrix out(a.frequency().shape());
  const auto nk = static_cast<Eigen::Index>(a.nk());
  for (std::size_t l = 0; l < a.p(); ++l) {
    Eigen::MatrixXcd acc = a.slice_matricization(l);
    for (std::size_t i = 1; i < e; ++i)
      acc = acc * a.slice_matricization(l);
    slice_matrix(out, l, nk, nk) = acc;
  }
  return TubalTensor::from_frequency(std::move(out));
}

} // namespace tubal

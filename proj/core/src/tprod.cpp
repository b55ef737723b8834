#include "tubal/tprod.hpp"

#include <Eigen/Dense>

#include "tubal/fft.hpp"
#include "tubal/matricize.hpp"

namespace tubal {

namespace {

void require_tprod_conformable(const Hypermatrix& a, const Hypermatrix& b) {
  if (a.order() != 3 || b.order() != 3)
    throw dimension_error("t-product: both operands must have order 3");
  if (a.shape()[1] != b.shape()[0])
    throw dimension_error("t-product: inner dimensions " + std::to_string(a.shape()[1]) +
                          " and " + std::to_string(b.shape()[0]) + " do not agree");
  if (a.shape()[2] != b.shape()[2])
    throw dimension_error("t-product: tubal lengths do not agree");
}

void require_square_slices(const Hypermatrix& a, const char* who) {
  if (a.order() != 3 || a.shape()[0] != a.shape()[1])
    throw std::invalid_argument(std::string(who) + ": square frontal slices required");
}

} // namespace

Hypermatrix tprod_naive(const Hypermatrix& a, const Hypermatrix& b) {
  require_tprod_conformable(a, b);
  const std::size_t m = a.shape()[0];
  const std::size_t q = b.shape()[1];
  const std::size_t p = a.shape()[2];
  const Eigen::MatrixXcd prod = bcirc(a) * unfold3(b);
  return fold3(prod, m, q, p);
}

Hypermatrix tprod_fft(const Hypermatrix& a, const Hypermatrix& b) {
  require_tprod_conformable(a, b);
  const auto m = static_cast<Eigen::Index>(a.shape()[0]);
  const auto n = static_cast<Eigen::Index>(a.shape()[1]);
  const auto q = static_cast<Eigen::Index>(b.shape()[1]);
  const std::size_t p = a.shape()[2];

  const Hypermatrix ahat = fft_tubal(a);
  const Hypermatrix bhat = fft_tubal(b);
  Hypermatrix chat(Shape{a.shape()[0], b.shape()[1], p});
  for (std::size_t l = 0; l < p; ++l)
    slice_matrix(chat, l, m, q) = slice_matrix(ahat, l, m, n) * slice_matrix(bhat, l, n, q);
  return ifft_tubal(chat);
}

Hypermatrix t_conj_transpose(const Hypermatrix& a) {
  if (a.order() != 3)
    throw dimension_error("t_conj_transpose: input must have order 3");
  const auto m = static_cast<Eigen::Index>(a.shape()[0]);
  const auto n = static_cast<Eigen::Index>(a.shape()[1]);
  const std::size_t p = a.shape()[2];
  Hypermatrix out(Shape{a.shape()[1], a.shape()[0], p});
  for (std::size_t l = 0; l < p; ++l) {
    const std::size_t src = l == 0 ? 0 : p - l;
    slice_matrix(out, l, n, m) = slice_matrix(a, src, m, n).adjoint();
  }
  return out;
}

Hypermatrix fourier_conjugation(const Hypermatrix& a) {
  if (a.order() != 3)
    throw dimension_error("fourier_conjugation: input must have order 3");
  const std::size_t p = a.shape()[2];
  const std::size_t stride = slice_count(a);
  Hypermatrix out(a.shape());
  for (std::size_t l = 0; l < p; ++l) {
    const std::size_t src = l == 0 ? 0 : p - l;
    for (std::size_t i = 0; i < stride; ++i)
      out[l * stride + i] = std::conj(a[src * stride + i]);
  }
  return out;
}

TubalTensor t_identity(std::size_t n, std::size_t p) {
  Hypermatrix spatial(Shape{n, n, p});
  for (std::size_t i = 0; i < n; ++i)
    spatial(i, i, std::size_t{0}) = 1.0;
  return TubalTensor::from_spatial(std::move(spatial));
}

bool is_t_hermitian(const Hypermatrix& a, double tol) {
  require_square_slices(a, "is_t_hermitian");
  const Hypermatrix diff = a - t_conj_transpose(a);
  return frobenius_norm(diff) <= tol * std::max(frobenius_norm(a), 1e-300);
}

Complex t_det(const Hypermatrix& a) {
  require_square_slices(a, "t_det");
  const auto n = static_cast<Eigen::Index>(a.shape()[0]);
  const std::size_t p = a.shape()[2];
  const Hypermatrix ahat = fft_tubal(a);
  Complex det(1.0, 0.0);
  for (std::size_t l = 0; l < p; ++l)
    det *= Eigen::MatrixXcd(slice_matrix(ahat, l, n, n)).determinant();
  return det;
}

Hypermatrix t_inverse(const Hypermatrix& a) {
  require_square_slices(a, "t_inverse");
  const auto n = static_cast<Eigen::Index>(a.shape()[0]);
  const std::size_t p = a.shape()[2];
  const Hypermatrix ahat = fft_tubal(a);
  Hypermatrix out(a.shape());
  for (std::size_t l = 0; l < p; ++l) {
    const Eigen::MatrixXcd slice = slice_matrix(ahat, l, n, n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(slice, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    if (sv[sv.size() - 1] <= kSingularTol * sv[0])
      throw singular_slice_error("t_inverse: frequency slice " + std::to_string(l) +
                                     " is singular",
                                 l);
    slice_matrix(out, l, n, n) = slice.partialPivLu().inverse();
  }
  return ifft_tubal(out);
}

std::vector<Eigen::MatrixXcd> phi_k1(const Hypermatrix& a) {
  require_square_slices(a, "phi_k1");
  const auto n = static_cast<Eigen::Index>(a.shape()[0]);
  const std::size_t p = a.shape()[2];
  const Hypermatrix ahat = fft_tubal(a);
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(p);
  for (std::size_t l = 0; l < p; ++l)
    out.emplace_back(slice_matrix(ahat, l, n, n));
  return out;
}

} // namespace tubal

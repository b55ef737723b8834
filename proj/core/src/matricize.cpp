#include "tubal/matricize.hpp"

#include <Eigen/SVD>

namespace tubal {

namespace {

std::size_t group_count(const Shape& s, std::size_t begin, std::size_t end) {
  std::size_t c = 1;
  for (std::size_t m = begin; m < end; ++m)
    c *= s[m];
  return c;
}

} // namespace

Eigen::MatrixXcd matricize(const Hypermatrix& a, std::size_t lead_modes) {
  if (lead_modes > a.order())
    throw std::invalid_argument("matricize: split position exceeds tensor order");
  const std::size_t rows = group_count(a.shape(), 0, lead_modes);
  const std::size_t cols = group_count(a.shape(), lead_modes, a.order());
  return Eigen::Map<const Eigen::MatrixXcd>(a.data().data(), static_cast<Eigen::Index>(rows),
                                            static_cast<Eigen::Index>(cols));
}

Hypermatrix dematricize(const Eigen::MatrixXcd& mat, const Shape& m, const Shape& n) {
  if (static_cast<std::size_t>(mat.rows()) != m.count() ||
      static_cast<std::size_t>(mat.cols()) != n.count())
    throw dimension_error("dematricize: matrix dimensions do not match the target shapes");
  std::vector<std::size_t> dims = m.dims();
  dims.insert(dims.end(), n.dims().begin(), n.dims().end());
  std::vector<Complex> data(mat.data(), mat.data() + mat.size());
  return Hypermatrix(Shape(std::move(dims)), std::move(data));
}

Eigen::VectorXcd hvec(const Hypermatrix& a) {
  return Eigen::Map<const Eigen::VectorXcd>(a.data().data(),
                                            static_cast<Eigen::Index>(a.size()));
}

Hypermatrix hvec_inv(const Eigen::VectorXcd& v, const Shape& shape) {
  if (static_cast<std::size_t>(v.size()) != shape.count())
    throw dimension_error("hvec_inv: vector length does not match shape count");
  return Hypermatrix(shape, std::vector<Complex>(v.data(), v.data() + v.size()));
}

Eigen::MatrixXcd cubically_balanced(const Hypermatrix& a) {
  const std::size_t d = a.order();
  if (d == 0 || d % 2 != 0)
    throw std::invalid_argument("cubically_balanced: order must be even, got " +
                                std::to_string(d));
  const std::size_t n = a.shape()[0];
  for (std::size_t m = 1; m < d; ++m)
    if (a.shape()[m] != n)
      throw std::invalid_argument("cubically_balanced: tensor is not cubical");
  return matricize(a, d / 2);
}

TensorSVD tensor_svd(const Hypermatrix& a, std::size_t lead_modes) {
  const Eigen::MatrixXcd mat = matricize(a, lead_modes);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();

  TensorSVD out;
  const double cutoff = sv.size() > 0 ? 1e-12 * sv[0] : 0.0;
  const Shape mshape = a.shape().prefix(lead_modes);
  const Shape nshape = a.shape().suffix(lead_modes);
  for (Eigen::Index alpha = 0; alpha < sv.size(); ++alpha) {
    if (sv[alpha] <= cutoff)
      break;
    out.sigmas.push_back(sv[alpha]);
    out.leftFactors.push_back(hvec_inv(svd.matrixU().col(alpha), mshape));
    out.rightFactors.push_back(hvec_inv(svd.matrixV().col(alpha), nshape));
  }
  out.rank = out.sigmas.size();
  return out;
}

Eigen::MatrixXcd unfold3(const Hypermatrix& a) {
  if (a.order() != 3)
    throw dimension_error("unfold3: input must have order 3");
  const std::size_t m = a.shape()[0];
  const std::size_t n = a.shape()[1];
  const std::size_t p = a.shape()[2];
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m * p), static_cast<Eigen::Index>(n));
  for (std::size_t l = 0; l < p; ++l)
    out.middleRows(static_cast<Eigen::Index>(l * m), static_cast<Eigen::Index>(m)) =
        slice_matrix(a, l, static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  return out;
}

Hypermatrix fold3(const Eigen::MatrixXcd& mat, std::size_t m, std::size_t n, std::size_t p) {
  if (static_cast<std::size_t>(mat.rows()) != m * p ||
      static_cast<std::size_t>(mat.cols()) != n)
    throw dimension_error("fold3: matrix dimensions do not match (m*p) x n");
  Hypermatrix out(Shape{m, n, p});
  for (std::size_t l = 0; l < p; ++l)
    slice_matrix(out, l, static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) =
        mat.middleRows(static_cast<Eigen::Index>(l * m), static_cast<Eigen::Index>(m));
  return out;
}

Eigen::MatrixXcd bcirc(const Hypermatrix& a) {
  if (a.order() != 3)
    throw dimension_error("bcirc: input must have order 3");
  const std::size_t m = a.shape()[0];
  const std::size_t n = a.shape()[1];
  const std::size_t p = a.shape()[2];
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m * p), static_cast<Eigen::Index>(n * p));
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c) {
      const std::size_t l = (r + p - c) % p;
      out.block(static_cast<Eigen::Index>(r * m), static_cast<Eigen::Index>(c * n),
                static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) =
          slice_matrix(a, l, static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    }
  return out;
}

Hypermatrix outer_product(std::span<const Hypermatrix> factors) {
  if (factors.empty())
    throw std::invalid_argument("outer_product: at least one factor required");
  Hypermatrix acc = factors[0];
  for (std::size_t f = 1; f < factors.size(); ++f)
    acc = outer_product(acc, factors[f]);
  return acc;
}

Hypermatrix outer_product(const Hypermatrix& a, const Hypermatrix& b) {
  std::vector<std::size_t> dims = a.shape().dims();
  dims.insert(dims.end(), b.shape().dims().begin(), b.shape().dims().end());
  Hypermatrix out(Shape(std::move(dims)));
  auto dst = out.data();
  auto da = a.data();
  auto db = b.data();
  // a's indices vary fastest in the combined linearization
  for (std::size_t j = 0; j < db.size(); ++j)
    for (std::size_t i = 0; i < da.size(); ++i)
      dst[j * da.size() + i] = da[i] * db[j];
  return out;
}

} // namespace tubal

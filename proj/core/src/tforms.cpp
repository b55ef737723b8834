#include "tubal/tforms.hpp"

#include <cmath>
#include <random>

#include "tubal/fft.hpp"
#include "tubal/matricize.hpp"

namespace tubal {

namespace {

Eigen::MatrixXcd ifft_rows(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd out = m;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    Eigen::VectorXcd row = out.row(r).transpose();
    out.row(r) = ifft(row).transpose();
  }
  return out;
}

// Conjugate transpose of a balanced even-order slice: swap the two k-index
// groups and conjugate, at the matrix level of the balanced matricization.
Hypermatrix slice_group_adjoint(const Hypermatrix& slice) {
  const Eigen::MatrixXcd m = cubically_balanced(slice).adjoint();
  const std::size_t k = slice.order() / 2;
  return dematricize(m, slice.shape().prefix(k), slice.shape().suffix(k));
}

Eigen::VectorXcd random_unit_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd w(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < w.size(); ++i)
    w[i] = Complex(gauss(rng), gauss(rng));
  const double norm = w.norm();
  if (norm == 0.0)
    w[0] = 1.0;
  else
    w /= norm;
  return w;
}

} // namespace

TubalVectorValue tubal_eval(const EvaluationPoint& z) {
  if (z.slices.size() == 0)
    throw dimension_error("tubal_eval: empty evaluation point");
  TubalVectorValue out;
  out.freq = z.slices;
  out.spatial = ifft_rows(z.slices);
  return out;
}

Hypermatrix t_multilinear_product(const Hypermatrix& a,
                                  std::span<const Hypermatrix> factors) {
  const std::size_t d = a.order() - 1;
  if (factors.size() != d)
    throw dimension_error("t_multilinear_product: need one factor per non-tubal mode");
  const std::size_t p = a.shape()[a.order() - 1];

  std::vector<Hypermatrix> fhat;
  fhat.reserve(d);
  std::vector<std::size_t> outdims(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    const Hypermatrix& x = factors[j];
    if (x.order() != 3)
      throw dimension_error("t_multilinear_product: factors must have order 3");
    if (x.shape()[0] != a.shape()[j])
      throw dimension_error("t_multilinear_product: factor " + std::to_string(j) +
                            " rows do not match mode extent");
    if (x.shape()[2] != p)
      throw dimension_error("t_multilinear_product: factor tubal length mismatch");
    outdims[j] = x.shape()[1];
    fhat.push_back(fft_tubal(x));
  }
  outdims[d] = p;

  const Hypermatrix ahat = fft_tubal(a);
  Hypermatrix chat((Shape(outdims)));
  const std::size_t out_stride = slice_count(chat);
  std::vector<Eigen::MatrixXcd> slices(d);
  for (std::size_t l = 0; l < p; ++l) {
    for (std::size_t j = 0; j < d; ++j)
      slices[j] = slice_matrix(fhat[j], l, static_cast<Eigen::Index>(factors[j].shape()[0]),
                               static_cast<Eigen::Index>(factors[j].shape()[1]));
    const Hypermatrix sl = multilinear_matmul(frontal_slice(ahat, l), slices);
    std::copy(sl.data().begin(), sl.data().end(), chat.data().begin() + l * out_stride);
  }
  return ifft_tubal(chat);
}

bool is_t_hps(const TubalTensor& a, double tol) {
  const Hypermatrix& sp = a.spatial();
  const std::size_t p = a.p();
  const double scale = std::max(frobenius_norm(sp), 1e-300);

  double herm_err2 = 0.0;
  for (std::size_t l = 0; l < p; ++l) {
    const Hypermatrix sl = frontal_slice(sp, l);
    if (!is_partially_symmetric(sl, tol))
      return false;
    const Hypermatrix mirror = slice_group_adjoint(frontal_slice(sp, (p - l) % p));
    for (std::size_t i = 0; i < sl.size(); ++i)
      herm_err2 += std::norm(sl[i] - mirror[i]);
  }
  return std::sqrt(herm_err2) <= tol * scale;
}

FormValues eval_t_hermitian_form(const TubalTensor& a, const EvaluationPoint& z) {
  if (!is_t_hps(a))
    throw std::invalid_argument(
        "eval_t_hermitian_form: tensor is not t-Hermitian partially symmetric");
  if (z.n() != a.n() || z.p() != a.p())
    throw dimension_error("eval_t_hermitian_form: evaluation point does not match (n, p)");

  FormValues out;
  out.freqValues.resize(static_cast<Eigen::Index>(a.p()));
  for (std::size_t l = 0; l < a.p(); ++l) {
    HermitianFormCoeffs h;
    h.coeffs = frontal_slice(a.frequency(), l);
    h.degree = a.k();
    h.side = a.n();
    out.freqValues[static_cast<Eigen::Index>(l)] =
        eval_hermitian_form(h, z.slices.col(static_cast<Eigen::Index>(l)));
  }
  out.spatialTube = ifft(out.freqValues.cast<Complex>());
  return out;
}

std::vector<HermitianFormCoeffs> theta_decompose(const TubalTensor& a, double tol) {
  if (!is_t_hps(a, tol))
    throw std::invalid_argument(
        "theta_decompose: tensor is not t-Hermitian partially symmetric");
  std::vector<HermitianFormCoeffs> out;
  out.reserve(a.p());
  for (std::size_t l = 0; l < a.p(); ++l) {
    HermitianFormCoeffs h;
    h.coeffs = frontal_slice(a.frequency(), l);
    h.degree = a.k();
    h.side = a.n();
    out.push_back(std::move(h));
  }
  return out;
}

TubalTensor psi_lift(std::span<const HermitianFormCoeffs> components) {
  if (components.empty())
    throw std::invalid_argument("psi_lift: at least one component required");
  const std::size_t k = components[0].degree;
  const std::size_t n = components[0].side;
  const std::size_t p = components.size();
  for (const auto& c : components) {
    if (c.degree != k || c.side != n)
      throw std::invalid_argument("psi_lift: components disagree on (n, k)");
    if (!is_hermitian_tensor(c.coeffs) || !is_partially_symmetric(c.coeffs))
      throw std::invalid_argument(
          "psi_lift: component is not Hermitian partially symmetric");
  }

  std::vector<std::size_t> dims(2 * k + 1, n);
  dims[2 * k] = p;
  Hypermatrix freq((Shape(dims)));
  const std::size_t stride = slice_count(freq);
  for (std::size_t l = 0; l < p; ++l)
    std::copy(components[l].coeffs.data().begin(), components[l].coeffs.data().end(),
              freq.data().begin() + l * stride);
  return TubalTensor::from_frequency(std::move(freq));
}

std::vector<SliceMinimum> t_hpd_sample_test(const TubalTensor& a, std::size_t samples,
                                            std::uint64_t seed) {
  if (samples == 0)
    throw std::invalid_argument("t_hpd_sample_test: at least one sample required");
  if (!is_t_hps(a))
    throw std::invalid_argument(
        "t_hpd_sample_test: tensor is not t-Hermitian partially symmetric");

  const std::size_t n = a.n();
  std::vector<SliceMinimum> out(a.p());
  for (std::size_t l = 0; l < a.p(); ++l) {
    HermitianFormCoeffs h;
    h.coeffs = frontal_slice(a.frequency(), l);
    h.degree = a.k();
    h.side = n;

    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (l + 1));
    SliceMinimum best;
    best.value = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
      const Eigen::VectorXcd w = random_unit_vector(n, rng);
      const double v = eval_hermitian_form(h, w);
      if (v < best.value) {
        best.value = v;
        best.witness = w;
      }
    }

    // projected-gradient refinement on the unit sphere, gradient by central
    // finite differences over the 2n real coordinates
    const double fd_step = 1e-5;
    Eigen::VectorXcd w = best.witness;
    for (int iter = 0; iter < 50; ++iter) {
      Eigen::VectorXcd grad(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) {
        Eigen::VectorXcd probe = w;
        probe[static_cast<Eigen::Index>(i)] += fd_step;
        const double f_re_p = eval_hermitian_form(h, probe.normalized());
        probe[static_cast<Eigen::Index>(i)] -= 2 * fd_step;
        const double f_re_m = eval_hermitian_form(h, probe.normalized());
        probe = w;
        probe[static_cast<Eigen::Index>(i)] += Complex(0.0, fd_step);
        const double f_im_p = eval_hermitian_form(h, probe.normalized());
        probe[static_cast<Eigen::Index>(i)] -= Complex(0.0, 2 * fd_step);
        const double f_im_m = eval_hermitian_form(h, probe.normalized());
        grad[static_cast<Eigen::Index>(i)] = Complex((f_re_p - f_re_m) / (2 * fd_step),
                                                     (f_im_p - f_im_m) / (2 * fd_step));
      }
      const double gnorm = grad.norm();
      if (gnorm < 1e-14)
        break;
      w = (w - (0.1 / gnorm) * grad).normalized();
      const double v = eval_hermitian_form(h, w);
      if (v < best.value) {
        best.value = v;
        best.witness = w;
      }
    }
    out[l] = std::move(best);
  }
  return out;
}

} // namespace tubal

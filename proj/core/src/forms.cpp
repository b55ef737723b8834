#include "tubal/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tubal {

namespace {

// Contract mode `mode` of `a` with factor X (n_mode x m): the result has mode
// extent m with entries summed over the old extent.
Hypermatrix contract_mode(const Hypermatrix& a, std::size_t mode, const Eigen::MatrixXcd& x) {
  const std::size_t d = a.order();
  const std::size_t nmode = a.shape()[mode];
  if (static_cast<std::size_t>(x.rows()) != nmode)
    throw dimension_error("multilinear_matmul: factor rows do not match mode extent");
  const std::size_t mout = static_cast<std::size_t>(x.cols());

  std::vector<std::size_t> dims = a.shape().dims();
  dims[mode] = mout;
  Hypermatrix out((Shape(dims)));

  // The flat layout factors as inner (modes < mode) x mode x outer.
  std::size_t inner = 1;
  for (std::size_t m = 0; m < mode; ++m)
    inner *= a.shape()[m];
  std::size_t outer = 1;
  for (std::size_t m = mode + 1; m < d; ++m)
    outer *= a.shape()[m];

  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t j = 0; j < mout; ++j)
      for (std::size_t kk = 0; kk < nmode; ++kk) {
        const Complex w = x(static_cast<Eigen::Index>(kk), static_cast<Eigen::Index>(j));
        if (w == Complex(0.0, 0.0))
          continue;
        const Complex* src = a.data().data() + (o * nmode + kk) * inner;
        Complex* dst = out.data().data() + (o * mout + j) * inner;
        for (std::size_t i = 0; i < inner; ++i)
          dst[i] += w * src[i];
      }
  return out;
}

void require_balanced_even(const Hypermatrix& a, const char* who) {
  if (a.order() == 0 || a.order() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": order must be even");
}

void require_cubical(const Hypermatrix& a, const char* who) {
  for (std::size_t m = 1; m < a.order(); ++m)
    if (a.shape()[m] != a.shape()[0])
      throw std::invalid_argument(std::string(who) + ": tensor is not cubical");
}

std::size_t pow_sz(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--)
    r *= base;
  return r;
}

} // namespace

std::vector<std::vector<std::size_t>> enumerate_permutations(std::size_t k) {
  if (k > kMaxSymDegree)
    throw std::invalid_argument("symmetrization degree k = " + std::to_string(k) +
                                " exceeds the supported bound " +
                                std::to_string(kMaxSymDegree));
  std::vector<std::size_t> pi(k);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> all;
  do {
    all.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return all;
}

Hypermatrix multilinear_matmul(const Hypermatrix& a,
                               std::span<const Eigen::MatrixXcd> factors) {
  if (factors.size() != a.order())
    throw dimension_error("multilinear_matmul: one factor per mode required");
  Hypermatrix acc = a;
  for (std::size_t mode = 0; mode < factors.size(); ++mode)
    acc = contract_mode(acc, mode, factors[mode]);
  return acc;
}

bool is_hermitian_tensor(const Hypermatrix& a, double tol) {
  require_balanced_even(a, "is_hermitian_tensor");
  const std::size_t k = a.order() / 2;
  for (std::size_t m = 0; m < k; ++m)
    if (a.shape()[m] != a.shape()[k + m])
      throw std::invalid_argument("is_hermitian_tensor: index groups must have equal extents");
  const double scale = std::max(frobenius_norm(a), 1e-300);

  double err2 = 0.0;
  std::vector<std::size_t> swapped(a.order());
  for (std::size_t lin = 0; lin < a.size(); ++lin) {
    const auto idx = a.shape().multi_index(lin);
    for (std::size_t m = 0; m < k; ++m) {
      swapped[m] = idx[k + m];
      swapped[k + m] = idx[m];
    }
    const Complex diff = a[lin] - std::conj(a.at(swapped));
    err2 += std::norm(diff);
  }
  return std::sqrt(err2) <= tol * scale;
}

bool is_partially_symmetric(const Hypermatrix& a, double tol) {
  require_balanced_even(a, "is_partially_symmetric");
  require_cubical(a, "is_partially_symmetric");
  const std::size_t k = a.order() / 2;
  if (k == 1)
    return true;
  const auto perms = enumerate_permutations(k);
  const double scale = std::max(frobenius_norm(a), 1e-300);

  std::vector<std::size_t> permuted(a.order());
  for (const auto& pi : perms)
    for (const auto& tau : perms) {
      double err2 = 0.0;
      for (std::size_t lin = 0; lin < a.size(); ++lin) {
        const auto idx = a.shape().multi_index(lin);
        for (std::size_t m = 0; m < k; ++m) {
          permuted[m] = idx[pi[m]];
          permuted[k + m] = idx[k + tau[m]];
        }
        err2 += std::norm(a[lin] - a.at(permuted));
      }
      if (std::sqrt(err2) > tol * scale)
        return false;
    }
  return true;
}

HermitianFormCoeffs make_form_coeffs(Hypermatrix coeffs, double tol) {
  require_balanced_even(coeffs, "make_form_coeffs");
  require_cubical(coeffs, "make_form_coeffs");
  if (!is_hermitian_tensor(coeffs, tol))
    throw std::invalid_argument("make_form_coeffs: coefficient tensor is not Hermitian");
  if (!is_partially_symmetric(coeffs, tol))
    throw std::invalid_argument("make_form_coeffs: coefficient tensor is not partially symmetric");
  HermitianFormCoeffs h;
  h.degree = coeffs.order() / 2;
  h.side = coeffs.shape()[0];
  h.coeffs = std::move(coeffs);
  return h;
}

double eval_hermitian_form(const HermitianFormCoeffs& h, const Eigen::VectorXcd& z) {
  if (static_cast<std::size_t>(z.size()) != h.side)
    throw dimension_error("eval_hermitian_form: argument length does not match side");
  const Eigen::MatrixXcd zc = z.conjugate();
  std::vector<Eigen::MatrixXcd> factors;
  factors.reserve(2 * h.degree);
  for (std::size_t m = 0; m < h.degree; ++m)
    factors.push_back(zc);
  for (std::size_t m = 0; m < h.degree; ++m)
    factors.push_back(z);
  const Hypermatrix value = multilinear_matmul(h.coeffs, factors);
  const Complex v = value[0];
  if (std::abs(v.imag()) > kRealnessTol * (1.0 + std::abs(v.real())))
    throw numerical_error("eval_hermitian_form: imaginary residue " +
                          std::to_string(v.imag()) + " exceeds tolerance");
  return v.real();
}

Hypermatrix psym(const Hypermatrix& a) {
  if (a.order() < 3 || a.order() % 2 == 0)
    throw std::invalid_argument("psym: input must have odd order 2k+1");
  const std::size_t k = (a.order() - 1) / 2;
  for (std::size_t m = 1; m < 2 * k; ++m)
    if (a.shape()[m] != a.shape()[0])
      throw std::invalid_argument("psym: first 2k modes must be cubical");
  if (k == 1)
    return a;

  const auto perms = enumerate_permutations(k);
  const double weight = 1.0 / static_cast<double>(perms.size() * perms.size());
  Hypermatrix out(a.shape());
  std::vector<std::size_t> permuted(a.order());
  for (std::size_t lin = 0; lin < a.size(); ++lin) {
    const auto idx = a.shape().multi_index(lin);
    permuted[2 * k] = idx[2 * k];
    Complex acc(0.0, 0.0);
    for (const auto& pi : perms)
      for (const auto& tau : perms) {
        for (std::size_t m = 0; m < k; ++m) {
          permuted[m] = idx[pi[m]];
          permuted[k + m] = idx[k + tau[m]];
        }
        acc += a.at(permuted);
      }
    out[lin] = weight * acc;
  }
  return out;
}

Eigen::MatrixXd perm_matrix(std::span<const std::size_t> pi, std::size_t n) {
  const std::size_t k = pi.size();
  std::vector<bool> seen(k, false);
  for (std::size_t v : pi) {
    if (v >= k || seen[v])
      throw std::invalid_argument("perm_matrix: not a permutation of [k]");
    seen[v] = true;
  }
  const std::size_t nk = pow_sz(n, k);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nk),
                                              static_cast<Eigen::Index>(nk));
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t col = 0; col < nk; ++col) {
    // column psi(i) has its 1 in row psi(pi . i)
    std::size_t row = 0;
    std::size_t stride = 1;
    for (std::size_t m = 0; m < k; ++m) {
      row += idx[pi[m]] * stride;
      stride *= n;
    }
    out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
    for (std::size_t m = 0; m < k; ++m) {
      if (++idx[m] < n)
        break;
      idx[m] = 0;
    }
  }
  return out;
}

SymmetryProjector p_sym(std::size_t n, std::size_t k) {
  const auto perms = enumerate_permutations(k);
  const std::size_t nk = pow_sz(n, k);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nk),
                                              static_cast<Eigen::Index>(nk));
  for (const auto& pi : perms)
    acc += perm_matrix(pi, n);
  acc /= static_cast<double>(perms.size());
  return SymmetryProjector{k, n, std::move(acc)};
}

bool is_hpsym_matrix(const Eigen::MatrixXcd& m, const SymmetryProjector& proj, double tol) {
  if (m.rows() != m.cols() || m.rows() != proj.psym.rows())
    throw dimension_error("is_hpsym_matrix: matrix does not match the projector");
  const double scale = std::max(m.norm(), 1e-300);
  if ((m - m.adjoint()).norm() > tol * scale * 2.0)
    return false;
  return (proj.psym * m * proj.psym - m).norm() <= tol * scale;
}

} // namespace tubal

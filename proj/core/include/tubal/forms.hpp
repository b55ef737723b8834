#pragma once

#include <Eigen/Core>

#include "tubal/hypermatrix.hpp"

namespace tubal {

/// Relative tolerance used when a computed form value must be real: the
/// imaginary residue is checked against tol * (1 + |Re|) and then dropped.
inline constexpr double kRealnessTol = 1e-10;

/// Largest supported symmetrization degree; S_k is enumerated in full.
inline constexpr std::size_t kMaxSymDegree = 5;

/// Right multilinear matrix multiplication: mode l of `a` is contracted
/// against the rows of factor l, so a factor of shape n_l x m_l turns mode l
/// from extent n_l into extent m_l. For order 2, a*(B, C) = B^T a C.
Hypermatrix multilinear_matmul(const Hypermatrix& a,
                               std::span<const Eigen::MatrixXcd> factors);

/// Group-swap conjugate symmetry a[i,j] = conj(a[j,i]) of a balanced
/// even-order tensor, within relative tolerance.
bool is_hermitian_tensor(const Hypermatrix& a, double tol = 1e-10);

/// Invariance under independent permutations of the two index groups of an
/// even-order cubical tensor; trivially true for k = 1.
bool is_partially_symmetric(const Hypermatrix& a, double tol = 1e-10);

/// Coefficient tensor of a degree-k Hermitian form: an order-2k cubical
/// Hermitian partially symmetric hypermatrix.
struct HermitianFormCoeffs {
  Hypermatrix coeffs;
  std::size_t degree = 0; // k
  std::size_t side = 0;   // n
};

/// Validates Hermiticity and partial symmetry, then wraps.
HermitianFormCoeffs make_form_coeffs(Hypermatrix coeffs, double tol = 1e-10);

/// Evaluates h(z) = coeffs * (conj z, ..., conj z, z, ..., z). The result of
/// a Hermitian coefficient tensor is real; the imaginary residue is checked
/// against kRealnessTol and discarded.
double eval_hermitian_form(const HermitianFormCoeffs& h, const Eigen::VectorXcd& z);

/// Slicewise average over S_k x S_k of an order-(2k+1) tensor: idempotent,
/// fixes Hermitian partially symmetric inputs, and its output is partially
/// symmetric in every slice.
Hypermatrix psym(const Hypermatrix& a);

/// Permutation matrix P_pi with P_pi e_{psi(i)} = e_{psi(pi . i)} on the
/// lexicographic basis of [n]^k.
Eigen::MatrixXd perm_matrix(std::span<const std::size_t> pi, std::size_t n);

/// Symmetrizer P_sym = (1/k!) sum_pi P_pi: a symmetric idempotent projector.
struct SymmetryProjector {
  std::size_t degree = 0;
  std::size_t side = 0;
  Eigen::MatrixXd psym; // n^k x n^k
};
SymmetryProjector p_sym(std::size_t n, std::size_t k);

/// True when M is Hermitian and P_sym M P_sym = M within relative tolerance;
/// equivalent to the full family of sandwich identities P_pi M P_tau^T = M.
bool is_hpsym_matrix(const Eigen::MatrixXcd& m, const SymmetryProjector& proj,
                     double tol = 1e-10);

/// All permutations of {0, ..., k-1} in lexicographic order. Throws past
/// kMaxSymDegree.
std::vector<std::vector<std::size_t>> enumerate_permutations(std::size_t k);

} // namespace tubal

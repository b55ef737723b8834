#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "tubal/hypermatrix.hpp"
#include "tubal/tforms.hpp"

namespace tubal {

/// Off-diagonal Frobenius mass of Q' M Q relative to ||M||_F above which the
/// family does not count as diagonalized by Q.
inline constexpr double kDiagonalityTol = 1e-8;
/// Commutator tolerance of the joint-MTU criterion, relative to the product
/// of the slice norms.
inline constexpr double kCommuteTol = 1e-8;
/// Spectral terms with max_l |lambda_i(l)| at or below this fraction of the
/// overall maximum are dropped from reconstructions and form evaluations.
inline constexpr double kLambdaTruncation = 1e-12;

/// Result of the pairwise commutation test; `failing_pair` names the first
/// slice pair whose matricizations do not commute.
struct MtuCheck {
  bool commuting = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/// Tests whether the balanced matricizations of all frequency slices commute
/// pairwise. Requires every slice matricization Hermitian.
MtuCheck check_joint_mtu(const TubalTensor& a, double tol = kCommuteTol);

/// Joint MTU diagonalization output: one shared unitary Q, its columns pulled
/// back to order-k hypermatrix factors, and one real eigenvalue vector per
/// factor across the slices. Frequency slice l reconstructs as
/// sum_i lambdas(i, l) * conj(U_i) outer U_i.
struct SpectralData {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
  Eigen::MatrixXcd eigvecs;            // Q, n^k x n^k unitary
  std::vector<Hypermatrix> factors;    // U_i with hvec(U_i) = conj(q_i)
  Eigen::MatrixXd lambdas;             // n^k x p, lambdas(i, l) = lambda_i^(l)
  Eigen::MatrixXcd spatialLambdas;     // row i = ifft of row i of lambdas
};

/// How the shared diagonalizer is chosen. `generic` diagonalizes a seeded
/// random real combination of the slices, which separates joint eigenspaces
/// almost surely even when single slices are degenerate. `paper` follows the
/// published algorithm and diagonalizes slice 1 alone.
enum class DiagonalizationMode { generic, paper };

SpectralData joint_eigendecompose(const TubalTensor& a, double tol = kDiagonalityTol,
                                  DiagonalizationMode mode = DiagonalizationMode::generic,
                                  std::uint64_t seed = 12345);

/// Rebuilds the tensor from its spectral data.
TubalTensor spectral_reconstruct(const SpectralData& s);

/// Eigenvalues of every slice matricization, one row per slice, sorted
/// descending. Computed independently per slice; no commutation needed.
Eigen::MatrixXd t_matrix_tensor_eigenvalues(const TubalTensor& a,
                                            double herm_tol = 1e-10);

/// Verdict of the commutant-form positivity test. TRUE means every slice
/// matricization admitted a Cholesky factorization and the family was
/// simultaneously diagonalized by the computed Q, which certifies that the
/// tensor is t-Hermitian positive definite. FALSE carries the reason.
struct PositivityVerdict {
  bool positive = false;
  std::string reason;                 // "cholesky-failed" | "not-commuting", empty on TRUE
  std::optional<std::size_t> slice;   // slice the failure was detected on
};

/// Positivity test for commutant forms: per-slice Cholesky on the balanced
/// matricizations, then a shared-diagonalizer check. Input must be
/// t-Hermitian partially symmetric.
PositivityVerdict algorithm3_positivity(const TubalTensor& a,
                                        DiagonalizationMode mode = DiagonalizationMode::generic,
                                        std::uint64_t seed = 12345);

/// Hadamard evaluation of a commutant form from its spectral data:
/// freq value l = sum_i lambda_i(l) * |U_i * (w^(l), ..., w^(l))|^2.
struct SpectralEvaluation {
  Eigen::MatrixXd uWeights; // n^k x p, uWeights(i, l) = u_i(l)
  FormValues result;
};
SpectralEvaluation spectral_form_eval(const SpectralData& s, const EvaluationPoint& z);

/// Spectral solution of B^alpha = A for joint-MTU-diagonalizable A with all
/// eigenvalues positive: per slice, lambda -> lambda^(1/alpha) over the shared
/// factors. B inherits the diagonalizer.
TubalTensor spectral_power(const TubalTensor& a, double alpha,
                           std::uint64_t seed = 12345);

} // namespace tubal

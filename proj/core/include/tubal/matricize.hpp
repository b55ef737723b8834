#pragma once

#include <Eigen/Core>

#include "tubal/hypermatrix.hpp"

namespace tubal {

/// Splits the modes of `a` after the first `lead_modes` and reshapes into a
/// |m| x |n| matrix: entry (linear row index of i, linear column index of j)
/// equals a[i, j]. Splits are contiguous in-order groups; permute modes first
/// if another grouping is wanted. Linear, and a pure reshape of the flat data.
Eigen::MatrixXcd matricize(const Hypermatrix& a, std::size_t lead_modes);

/// Inverse of matricize: rebuilds the tensor with row shape `m` and column
/// shape `n` from a |m| x |n| matrix.
Hypermatrix dematricize(const Eigen::MatrixXcd& mat, const Shape& m, const Shape& n);

/// Vectorization by the full-shape linearization; for order-2 input this is
/// ordinary column stacking.
Eigen::VectorXcd hvec(const Hypermatrix& a);
Hypermatrix hvec_inv(const Eigen::VectorXcd& v, const Shape& shape);

/// Balanced split of an even-order cubical tensor into an n^k x n^k matrix.
Eigen::MatrixXcd cubically_balanced(const Hypermatrix& a);

/// SVD of a matricization mapped back to tensor factors: the source equals
/// sum_alpha sigma_alpha * left[alpha] outer conj(right[alpha]), with both
/// hvec factor families orthonormal.
struct TensorSVD {
  std::vector<double> sigmas;             // nonincreasing, positive
  std::vector<Hypermatrix> leftFactors;   // shapes = leading mode group
  std::vector<Hypermatrix> rightFactors;  // shapes = trailing mode group
  std::size_t rank = 0;
};
TensorSVD tensor_svd(const Hypermatrix& a, std::size_t lead_modes);

/// Stacks the frontal slices of an m x n x p tensor vertically into mp x n.
Eigen::MatrixXcd unfold3(const Hypermatrix& a);
/// Inverse of unfold3.
Hypermatrix fold3(const Eigen::MatrixXcd& mat, std::size_t m, std::size_t n, std::size_t p);

/// Block-circulant matrix: block (r, c) is frontal slice (r - c mod p).
Eigen::MatrixXcd bcirc(const Hypermatrix& a);

/// Segre outer product of a list of tensors; the result shape is the
/// concatenation of the factor shapes.
Hypermatrix outer_product(std::span<const Hypermatrix> factors);
Hypermatrix outer_product(const Hypermatrix& a, const Hypermatrix& b);

} // namespace tubal

#pragma once

#include <Eigen/Core>

#include "tubal/hypermatrix.hpp"

namespace tubal {

/// Einstein product: contracts the trailing `contracted` modes of `a` against
/// the leading `contracted` modes of `b`. With one mode in every group this
/// is matrix multiplication. Implemented as a matricized product, which is
/// exact because matricization turns split outer products into rank-1
/// matrices.
Hypermatrix einstein_product(const Hypermatrix& a, const Hypermatrix& b,
                             std::size_t contracted);

/// t-Einstein product: tubewise circular convolution with Einstein
/// contraction over the k trailing/leading index groups; slicewise Einstein
/// product in the frequency domain. Reduces to the t-product at k = 1.
TubalTensor t_einstein(const TubalTensor& a, const TubalTensor& b);

/// Generalized t-conjugate transpose: every frequency slice swaps its two
/// k-index groups and conjugates. Agrees with t_conj_transpose at k = 1 and
/// satisfies (A ⊠ B)^H = B^H ⊠ A^H.
TubalTensor gen_t_conj_transpose(const TubalTensor& a);

/// Unit of the t-Einstein algebra: every frequency slice is the order-2k
/// Kronecker-delta tensor, i.e. its balanced matricization is the identity.
TubalTensor t_identity_k(std::size_t n, std::size_t p, std::size_t k);

/// Cubically balanced matricizations of all frequency slices: the involutive
/// algebra isomorphism onto p copies of the n^k x n^k matrices.
struct SliceMatrixFamily {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Eigen::MatrixXcd> matrices;
};
SliceMatrixFamily phi(const TubalTensor& a);
TubalTensor phi_inv(const SliceMatrixFamily& family, std::size_t n, std::size_t k);

/// e-fold t-Einstein power, computed slicewise by matrix powers.
TubalTensor t_power_integer(const TubalTensor& a, std::size_t e);

} // namespace tubal

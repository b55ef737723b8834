#pragma once

#include <Eigen/Core>

#include "tubal/hypermatrix.hpp"

namespace tubal {

/// Default relative tolerance for Hermiticity-style predicates.
inline constexpr double kHermitianTol = 1e-10;
/// A frequency slice counts as singular when smallest/largest singular value
/// falls at or below this ratio.
inline constexpr double kSingularTol = 1e-12;

/// t-product by the definition: fold(bcirc(A) * unfold(B)). Materializes the
/// block-circulant matrix on purpose; this is the Theta(m n p^2 q) reference
/// path the FFT path is checked against.
Hypermatrix tprod_naive(const Hypermatrix& a, const Hypermatrix& b);

/// t-product through the tubal FFT: slicewise matrix products in the
/// frequency domain. Cost O((mnp+npq+mpq) log p + mnpq).
Hypermatrix tprod_fft(const Hypermatrix& a, const Hypermatrix& b);

/// Conjugate-transposes slice 1 in place and slices 2..p in reversed order;
/// in the frequency domain this is the slicewise conjugate transpose.
Hypermatrix t_conj_transpose(const Hypermatrix& a);

/// Spatial involution J with fft(J(A)) = conj(fft(A)): slice l maps to the
/// conjugate of slice (-l mod p).
Hypermatrix fourier_conjugation(const Hypermatrix& a);

/// Unit of the t-product algebra: slice 1 is I_n, all other slices zero.
TubalTensor t_identity(std::size_t n, std::size_t p);

/// True when ||A - A^H||_F <= tol * ||A||_F; equivalently every frequency
/// slice is Hermitian to the same tolerance.
bool is_t_hermitian(const Hypermatrix& a, double tol = kHermitianTol);

/// Product of the determinants of all frequency slices. Multiplicative over
/// the t-product and zero exactly on the non-t-invertible locus.
Complex t_det(const Hypermatrix& a);

/// Slicewise inverse in the frequency domain. Throws singular_slice_error
/// (carrying the slice index) when any slice fails the kSingularTol test.
Hypermatrix t_inverse(const Hypermatrix& a);

/// The slice family (fft(A)_(1), ..., fft(A)_(p)): an involutive algebra
/// isomorphism onto p copies of the n x n matrices.
std::vector<Eigen::MatrixXcd> phi_k1(const Hypermatrix& a);

} // namespace tubal

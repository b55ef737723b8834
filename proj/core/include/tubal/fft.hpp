#pragma once

#include <Eigen/Core>

#include "tubal/hypermatrix.hpp"

namespace tubal {

/// Transform convention along the tubal (last) mode.
///
/// Forward kernel: b[m] = sum_l a[l] * exp(+2*pi*i*m*l/p), unnormalized.
/// Inverse carries the 1/p factor, so ifft(fft(a)) == a.
///
/// The positive exponent is deliberate: it makes the block-circulant
/// factorization, the Fourier-conjugation identity and the frequency-domain
/// form of the conjugate transpose hold slice-for-slice without reindexing.
/// Most FFT backends use the negative-exponent forward transform, so the
/// implementation maps forward here onto the backend's inverse kernel.
struct FourierConvention {
  static constexpr int exponent_sign = +1;
  static constexpr double forward_scale = 1.0;
  // inverse scale is 1/p
};

/// Forward transform of every tube along the last mode. Linear, invertible.
Hypermatrix fft_tubal(const Hypermatrix& a);
/// Inverse of fft_tubal.
Hypermatrix ifft_tubal(const Hypermatrix& a);

/// Same transforms on a single tube.
Eigen::VectorXcd fft(const Eigen::VectorXcd& a);
Eigen::VectorXcd ifft(const Eigen::VectorXcd& a);

/// In-place transform of `howmany` interleaved tubes of length p laid out
/// with stride `howmany` (the tubal layout of a flat hypermatrix).
void transform_last_mode(Complex* data, std::size_t howmany, std::size_t p, bool forward);

} // namespace tubal

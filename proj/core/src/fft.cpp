#include "tubal/fft.hpp"

#include <mutex>

#include <fftw3.h>

namespace tubal {

namespace {

// FFTW plan creation is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

} // namespace

void transform_last_mode(Complex* data, std::size_t howmany, std::size_t p, bool forward) {
  if (p == 1 || howmany == 0)
    return; // length-1 transform is the identity

  auto* buf = reinterpret_cast<fftw_complex*>(data);
  const int n = static_cast<int>(p);
  const int stride = static_cast<int>(howmany);
  // Paper-forward (+ exponent) is FFTW's BACKWARD kernel.
  const int sign = forward ? FFTW_BACKWARD : FFTW_FORWARD;

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_many_dft(1, &n, static_cast<int>(howmany), buf, nullptr, stride, 1, buf,
                              nullptr, stride, 1, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  if (!forward) {
    const double scale = 1.0 / static_cast<double>(p);
    for (std::size_t i = 0; i < howmany * p; ++i)
      data[i] *= scale;
  }
}

Hypermatrix fft_tubal(const Hypermatrix& a) {
  Hypermatrix out = a;
  const std::size_t p = a.shape()[a.order() - 1];
  transform_last_mode(out.data().data(), slice_count(a), p, true);
  return out;
}

Hypermatrix ifft_tubal(const Hypermatrix& a) {
  Hypermatrix out = a;
  const std::size_t p = a.shape()[a.order() - 1];
  transform_last_mode(out.data().data(), slice_count(a), p, false);
  return out;
}

Eigen::VectorXcd fft(const Eigen::VectorXcd& a) {
  Eigen::VectorXcd out = a;
  transform_last_mode(out.data(), 1, static_cast<std::size_t>(a.size()), true);
  return out;
}

Eigen::VectorXcd ifft(const Eigen::VectorXcd& a) {
  Eigen::VectorXcd out = a;
  transform_last_mode(out.data(), 1, static_cast<std::size_t>(a.size()), false);
  return out;
}

} // namespace tubal

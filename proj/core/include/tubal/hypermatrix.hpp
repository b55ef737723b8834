#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "tubal/errors.hpp"

namespace tubal {

using Complex = std::complex<double>;

/// Ordered list of mode extents. Linearization is generalized column-major:
/// the first index varies fastest, so a (m,n)-split matricization of the
/// flat data is a pure reshape.
class Shape {
public:
  Shape() = default;
  Shape(std::initializer_list<std::size_t> dims) : Shape(std::vector<std::size_t>(dims)) {}
  explicit Shape(std::vector<std::size_t> dims);

  std::size_t order() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t mode) const { return dims_[mode]; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  /// Total element count (product of all extents).
  std::size_t count() const noexcept { return count_; }

  /// Zero-based mixed-radix linearization of a zero-based multi-index.
  /// The one-based bijection of the matricization literature is
  /// linear_index(i - 1) + 1.
  std::size_t linear_index(std::span<const std::size_t> idx) const;
  /// Inverse of linear_index.
  std::vector<std::size_t> multi_index(std::size_t lin) const;

  /// Leading extents [0, cut) as a new shape.
  Shape prefix(std::size_t cut) const;
  /// Trailing extents [cut, order) as a new shape.
  Shape suffix(std::size_t cut) const;

  bool operator==(const Shape& other) const noexcept { return dims_ == other.dims_; }
  bool operator!=(const Shape& other) const noexcept { return !(*this == other); }

  std::string to_string() const;

private:
  std::vector<std::size_t> dims_;
  std::size_t count_ = 1;
};

/// Dense complex tensor of arbitrary order. The universal carrier every
/// other operation builds on: data is flat, generalized column-major, and
/// immutable by convention once an operation has produced it.
class Hypermatrix {
public:
  Hypermatrix() = default;
  /// Zero-filled tensor of the given shape.
  explicit Hypermatrix(Shape shape);
  Hypermatrix(Shape shape, std::vector<Complex> data);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t order() const noexcept { return shape_.order(); }
  std::size_t size() const noexcept { return data_.size(); }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  Complex& operator[](std::size_t lin) { return data_[lin]; }
  const Complex& operator[](std::size_t lin) const { return data_[lin]; }

  /// Unchecked element access by zero-based multi-index.
  template <typename... Index>
  Complex& operator()(Index... idx) {
    const std::size_t buf[] = {static_cast<std::size_t>(idx)...};
    return data_[shape_.linear_index(buf)];
  }
  template <typename... Index>
  const Complex& operator()(Index... idx) const {
    const std::size_t buf[] = {static_cast<std::size_t>(idx)...};
    return data_[shape_.linear_index(buf)];
  }

  /// Bounds-checked element access.
  Complex& at(std::span<const std::size_t> idx);
  const Complex& at(std::span<const std::size_t> idx) const;

  Hypermatrix& operator+=(const Hypermatrix& other);
  Hypermatrix& operator-=(const Hypermatrix& other);
  Hypermatrix& operator*=(Complex factor);

private:
  Shape shape_;
  std::vector<Complex> data_;
};

Hypermatrix operator+(Hypermatrix lhs, const Hypermatrix& rhs);
Hypermatrix operator-(Hypermatrix lhs, const Hypermatrix& rhs);
Hypermatrix operator*(Complex factor, Hypermatrix a);

/// Entrywise complex conjugate.
Hypermatrix conj(const Hypermatrix& a);

/// Sesquilinear Frobenius pairing sum conj(b[i]) * a[i]; conjugation sits on
/// the second argument.
Complex frobenius_inner(const Hypermatrix& a, const Hypermatrix& b);
double frobenius_norm(const Hypermatrix& a);

/// Frontal slice: fixes the last index to l (zero-based) and drops that mode.
Hypermatrix frontal_slice(const Hypermatrix& a, std::size_t l);

/// Tube along the last mode at a fixed multi-index over the leading modes.
Eigen::VectorXcd tube(const Hypermatrix& a, std::span<const std::size_t> idx);

/// Reorders modes: result index j satisfies result[j] = a[j ∘ perm], i.e.
/// mode m of the result is mode perm[m] of the input.
Hypermatrix permute_modes(const Hypermatrix& a, std::span<const std::size_t> perm);

/// Number of elements in one frontal slice (product of all but the last extent).
std::size_t slice_count(const Hypermatrix& a);

/// Views frontal slice l of an order-3 or balanced odd-order tensor as a
/// column-major matrix with `rows` rows. Valid while `a` is alive.
Eigen::Map<const Eigen::MatrixXcd> slice_matrix(const Hypermatrix& a, std::size_t l,
                                                Eigen::Index rows, Eigen::Index cols);
Eigen::Map<Eigen::MatrixXcd> slice_matrix(Hypermatrix& a, std::size_t l,
                                          Eigen::Index rows, Eigen::Index cols);

/// Order-(2k+1) tensor, cubical side n in the first 2k modes, tubal length p.
/// Carries both the spatial tensor and its tubal-FFT image; all operations on
/// the algebra read whichever domain is cheaper.
class TubalTensor {
public:
  /// Wraps a spatial-domain tensor; the frequency view is computed once here.
  static TubalTensor from_spatial(Hypermatrix spatial);
  /// Wraps a frequency-domain tensor; the spatial view is computed once here.
  static TubalTensor from_frequency(Hypermatrix frequency);

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t p() const noexcept { return p_; }
  /// n^k, the side of the cubically balanced matricization of each slice.
  std::size_t nk() const noexcept { return nk_; }

  const Hypermatrix& spatial() const noexcept { return spatial_; }
  const Hypermatrix& frequency() const noexcept { return frequency_; }

  /// Cubically balanced matricization of frequency slice l (zero copy).
  Eigen::Map<const Eigen::MatrixXcd> slice_matricization(std::size_t l) const;

private:
  TubalTensor(Hypermatrix spatial, Hypermatrix frequency);

  Hypermatrix spatial_;
  Hypermatrix frequency_;
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::size_t nk_ = 0;
};

/// Validates that `shape` is a legal TubalTensor shape and returns (k, n, p).
struct TubalDims {
  std::size_t k;
  std::size_t n;
  std::size_t p;
};
TubalDims tubal_dims(const Shape& shape);

} // namespace tubal

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tubal {

/// Shapes of the operands do not conform.
class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A frequency slice is numerically singular; carries the offending slice.
class singular_slice_error : public std::runtime_error {
public:
  singular_slice_error(std::string what, std::size_t slice)
      : std::runtime_error(std::move(what)), slice_(slice) {}
  std::size_t slice() const noexcept { return slice_; }

private:
  std::size_t slice_;
};

/// A value that must be real (or a residual that must vanish) exceeded its tolerance.
class numerical_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The slice matricizations do not commute, so no joint MTU diagonalization exists.
class not_joint_mtu_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A spectral operation required positive eigenvalues and found one that is not.
class not_hpd_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace tubal

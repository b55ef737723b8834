#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "tubal/forms.hpp"
#include "tubal/hypermatrix.hpp"

namespace tubal {

/// One complex n-vector per frequency slice: the point the tubal
/// indeterminate vector is evaluated at. The symbolic indeterminates are
/// never materialized; their contract is that frequency slice l of the tubal
/// vector evaluates to column l.
struct EvaluationPoint {
  Eigen::MatrixXcd slices; // n x p, column l = z^(l)

  std::size_t n() const { return static_cast<std::size_t>(slices.rows()); }
  std::size_t p() const { return static_cast<std::size_t>(slices.cols()); }
};

/// An evaluated tubal vector in both domains.
struct TubalVectorValue {
  Eigen::MatrixXcd spatial; // n x p
  Eigen::MatrixXcd freq;    // n x p, column l = z^(l)
};

/// Value of a t-Hermitian form: p real frequency scalars and the
/// corresponding spatial tube (their inverse transform).
struct FormValues {
  Eigen::VectorXd freqValues;   // length p
  Eigen::VectorXcd spatialTube; // length p
};

/// Realizes the tubal vector of indeterminates at Z: frequency slice l is
/// z^(l), the spatial side is its inverse tubal transform.
TubalVectorValue tubal_eval(const EvaluationPoint& z);

/// Right t-multilinear hypermatrix product of an order-(d+1) tensor with d
/// evaluated order-3 factors: slicewise multilinear matrix multiplication in
/// the frequency domain. Factor j must have shape a.shape()[j] x m_j x p.
Hypermatrix t_multilinear_product(const Hypermatrix& a,
                                  std::span<const Hypermatrix> factors);

/// t-Hermitian partial symmetry: A equals its generalized t-conjugate
/// transpose and every slice is partially symmetric. Checked spatially; the
/// frequency-domain formulation (every frequency slice Hermitian partially
/// symmetric) is equivalent.
bool is_t_hps(const TubalTensor& a, double tol = 1e-10);

/// Evaluates the degree-k t-Hermitian form of A at Z. Slice l of the result
/// is the classical Hermitian form of frequency slice l at z^(l); realness of
/// every slice value is enforced.
FormValues eval_t_hermitian_form(const TubalTensor& a, const EvaluationPoint& z);

/// Slicewise decomposition: the p classical coefficient tensors (the
/// frequency slices of A). Component l evaluated at z^(l) reproduces the
/// corresponding entry of eval_t_hermitian_form.
std::vector<HermitianFormCoeffs> theta_decompose(const TubalTensor& a, double tol = 1e-10);

/// Universal lift: assembles p degree-k coefficient tensors into the unique
/// t-Hermitian partially symmetric tensor whose decomposition they are.
TubalTensor psi_lift(std::span<const HermitianFormCoeffs> components);

/// Per-slice minimum estimate of the slice forms over the unit sphere:
/// `samples` uniform points followed by projected-gradient refinement.
/// All-positive minima are evidence (not proof) of positive definiteness;
/// any negative value is a disproof and its witness reproduces it.
struct SliceMinimum {
  double value = 0.0;
  Eigen::VectorXcd witness;
};
std::vector<SliceMinimum> t_hpd_sample_test(const TubalTensor& a, std::size_t samples,
                                            std::uint64_t seed);

} // namespace tubal

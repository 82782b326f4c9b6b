#pragma once

#include <Eigen/Dense>
#include <complex>

#include "supermult/errors.hpp"
#include "supermult/rng.hpp"

namespace supermult {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Validity tolerance for unitarity / Hermiticity / trace checks.
inline constexpr double kValidityTol = 1e-10;
/// Tolerance for spectral reconstruction checks.
inline constexpr double kReconstructTol = 1e-8;
/// Eigenvalues of nominally PSD matrices in [-kPsdClampTol, 0) are
/// clamped to 0 before fractional powers; below that is an error.
inline constexpr double kPsdClampTol = 1e-8;

/// Largest absolute entry of M - M^dagger.
double hermiticity_error(const ComplexMatrix& m);

bool is_finite(const ComplexMatrix& m);

/// Unit vector in a d-dimensional complex space; the optimization variable.
class PureState {
 public:
  /// Requires || amplitudes || = 1 within 1e-12.
  explicit PureState(ComplexVector amplitudes);

  /// Rescales an arbitrary nonzero vector to unit norm.
  static PureState normalized(ComplexVector v);

  Eigen::Index dim() const { return amps_.size(); }
  const ComplexVector& amplitudes() const { return amps_; }

  /// Rank-one projector |psi><psi|.
  ComplexMatrix projector() const;

  /// Multiplies by a global phase so the first nonzero amplitude is real
  /// and nonnegative. Objectives are phase invariant, so optimizers report
  /// states in this gauge.
  PureState gauge_fixed() const;

 private:
  ComplexVector amps_;
};

/// Hermitian positive semidefinite unit-trace matrix.
class DensityOperator {
 public:
  /// Requires Hermitian within 1e-10 entrywise, trace 1 within 1e-10 and
  /// smallest eigenvalue >= -1e-10.
  explicit DensityOperator(ComplexMatrix matrix);

  static DensityOperator maximally_mixed(Eigen::Index d);
  static DensityOperator from_pure(const PureState& psi);

  Eigen::Index dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Haar-distributed d x d unitary: QR of a standard complex Gaussian
/// matrix with the R-diagonal phase correction.
ComplexMatrix haar_unitary(Eigen::Index d, SeededRng& rng);

struct HermitianEig {
  RealVector eigenvalues;      // sorted descending
  ComplexMatrix eigenvectors;  // columns match eigenvalues
};

/// Spectral decomposition of a Hermitian matrix (Hermitian within 1e-8).
HermitianEig eig_hermitian(const ComplexMatrix& m);

/// Eigenvalues of a nominally PSD Hermitian matrix, sorted descending,
/// with round-off negatives in [-1e-8, 0) clamped to 0. Throws NotPsdError
/// below -1e-8.
RealVector psd_spectrum(const ComplexMatrix& m);

/// Schatten p-norm (sum_a lambda_a^p)^(1/p) of a Hermitian PSD matrix;
/// p = infinity gives the largest eigenvalue. Requires p > 1.
double schatten_norm(const ComplexMatrix& m, double p);

/// Same norm evaluated on a precomputed nonnegative spectrum.
double spectrum_pnorm(const RealVector& eigenvalues, double p);

/// M^x for Hermitian PSD M via the spectral decomposition (clamped).
ComplexMatrix psd_power(const ComplexMatrix& m, double exponent);

/// Kronecker product; (a x b)[i*rows(B)+k, j*cols(B)+l] = A(i,j) B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// (1/sqrt(d)) sum_a |a>|a>, dimension d^2. Its projector is invariant
/// under U (x) conj(U) for every unitary U.
PureState max_entangled_state(Eigen::Index d);

/// Renyi entropy (1/(1-p)) log2 tr rho^p for p > 0, p != 1.
double renyi_entropy(const DensityOperator& rho, double p);

/// -sum lambda log2 lambda with 0 log 0 = 0.
double von_neumann_entropy(const DensityOperator& rho);

}  // namespace supermult

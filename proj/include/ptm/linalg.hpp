#pragma once

#include <optional>
#include <vector>

#include "ptm/matrix.hpp"

// Dense kernels sized for desk-scale problems (N up to a few dozen).
namespace ptm::linalg {

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k pairs with values[k]
};

struct GeneralEigen {
  std::vector<Complex> values;  // ascending by real part, then imaginary part
};

/// Cyclic Jacobi. Converged when the off-diagonal Frobenius norm drops to
/// 1e-13 * ||A||_F; throws NumericalError after 100 sweeps.
/// Rejects input whose relative asymmetry exceeds 1e-12.
SymmetricEigen eig_symmetric(const Matrix& a);

/// Eigenvalues of a general real square matrix.
///
/// Tridiagonal input whose off-diagonal products b_k * c_k are all positive is
/// symmetrized by a diagonal similarity and routed to eig_symmetric. Anything
/// else goes through Householder reduction to Hessenberg form followed by
/// Francis double-shift QR.
GeneralEigen eig_general(const Matrix& a);

/// Default relative rank tolerance.
inline constexpr double kDefaultRankTol = 1e-10;

/// Orthonormal basis of ker(A) as the columns of the returned matrix
/// (rows = A.cols()). A singular value counts as zero when it is at most
/// tol * max|a_ij|. Computed with one-sided (Hestenes) Jacobi SVD.
Matrix null_space(const Matrix& a, double tol = kDefaultRankTol);

/// Symmetric positive-definite square root. DomainError if any eigenvalue is
/// at most 1e-12 times the spectral radius.
Matrix sqrt_psd(const Matrix& a);

/// Inverse of the symmetric positive-definite square root.
Matrix inv_sqrt_psd(const Matrix& a);

/// Inverse by Gauss-Jordan with partial pivoting; DomainError when singular.
Matrix inverse(const Matrix& a);

/// Scaling and squaring with a Taylor series summed to machine precision at
/// scaled 1-norm <= 0.5.
ComplexMatrix expm(const ComplexMatrix& a);

}  // namespace ptm::linalg

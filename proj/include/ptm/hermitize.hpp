#pragma once

#include <cstdint>

#include "ptm/matrix.hpp"
#include "ptm/metrics.hpp"

namespace ptm {

struct HermitizationResult {
  Matrix omega;                    // symmetric positive-definite root of Theta
  Matrix h;                        // Omega H Omega^{-1}
  double symmetry_residual = 0.0;  // ||h - h^T||_F
  double spectral_match_residual = 0.0;  // max |E_k(h) - E_k(H)| over sorted spectra
};

/// Maps H to the isospectral h = Omega H Omega^{-1}, Theta = Omega^2.
/// DomainError unless Theta is positive definite and
/// dieudonne_residual(H, Theta) < 1e-9 ||H||_F.
HermitizationResult hermitize(const Matrix& h, const Metric& theta);

/// ||Theta^{-1} H^T Theta - H||_F.
double crypto_hermiticity_residual(const Matrix& h, const Metric& theta);

/// psi^dagger Theta phi.
Complex metric_inner(const ComplexVector& psi, const ComplexVector& phi, const Metric& theta);

/// |<psi(t), psi(t)>_Theta - <psi0, psi0>_Theta| with psi(t) = exp(-i H t) psi0.
/// Conserved for any Dieudonne-compatible Theta, definite or not.
/// DomainError if dieudonne_residual(H, Theta) >= 1e-9 ||H||_F.
double evolve_norm_drift(const Matrix& h, const Metric& theta, const ComplexVector& psi0,
                         double t);

/// Unit-norm complex vector with real and imaginary parts drawn uniformly from
/// [-1, 1) by a 64-bit Mersenne Twister (53 high bits per draw), then normalized.
ComplexVector random_state(std::size_t n, std::uint64_t seed);

}  // namespace ptm

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ptm/matrix.hpp"

namespace ptm {

namespace provenance {
/// Closed-form sparse solution with 2k-1 diagonals of which only every other
/// one is occupied (k = 1 diagonal, 2 bidiagonal, 3 "tridiagonal").
struct ClosedForm {
  int band = 1;
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};
struct NullSpaceElement {
  std::size_t index = 0;
  friend bool operator==(const NullSpaceElement&, const NullSpaceElement&) = default;
};
struct Combination {
  friend bool operator==(const Combination&, const Combination&) = default;
};
}  // namespace provenance

using Provenance =
    std::variant<provenance::ClosedForm, provenance::NullSpaceElement, provenance::Combination>;

std::string describe(const Provenance& p);

/// Candidate metric: a real symmetric solution of H^T Theta = Theta H.
struct Metric {
  Matrix matrix;
  Provenance provenance;
  std::vector<double> coefficients;  // combination weights, empty otherwise

  std::size_t size() const { return matrix.rows(); }
};

enum class MetricKind { Diagonal, Bidiagonal, Tridiagonal };

std::string_view to_string(MetricKind k);
MetricKind parse_metric_kind(std::string_view name);

/// diag(alpha, 1, ..., 1, alpha), alpha = (1 - lambda) / (1 + lambda).
/// PoleError at lambda = -1.
Metric theta_diagonal(std::size_t n, double lambda);

/// Zero diagonal, first off-diagonal (beta, 1, ..., 1, beta), beta = 1 - lambda.
Metric theta_bidiagonal(std::size_t n, double lambda);

/// Checkerboard pattern on the main and second diagonals:
///   main   (0, v, 1, ..., 1, v, 0)
///   second (z, v, ..., v, z)
/// with z = (1 - lambda) / (1 + lambda^2), v = 1 / (1 + lambda^2). Needs n >= 4.
Metric theta_tridiagonal(std::size_t n, double lambda);

Metric closed_form(MetricKind kind, std::size_t n, double lambda);

/// ||H^T Theta - Theta H||_F.
double dieudonne_residual(const Matrix& h, const Metric& theta);
double dieudonne_residual(const Matrix& h, const Matrix& theta);

/// Constraint matrix of S -> H^T S - S H on symmetric S of half-bandwidth
/// <= max_bandwidth. Columns are Frobenius-orthonormal symmetric coordinates
/// (E_ii, and (E_ij + E_ji)/sqrt(2) for i < j, in row-major order); rows are the
/// strictly upper entries of the antisymmetric image.
struct DieudonneSystem {
  Matrix constraints;
  std::vector<std::pair<std::size_t, std::size_t>> coordinates;  // (i, j), i <= j
};

DieudonneSystem dieudonne_system(const Matrix& h,
                                 std::optional<std::size_t> max_bandwidth = std::nullopt);

/// Frobenius-orthonormal basis of all symmetric solutions, each normalized so
/// its first nonzero entry (row-major) is positive.
std::vector<Metric> solve_dieudonne_basis(const Matrix& h,
                                          std::optional<std::size_t> max_bandwidth = std::nullopt);

/// sum_k coeffs[k] * basis[k].
Metric combine(const std::vector<Metric>& basis, const std::vector<double>& coeffs);

}  // namespace ptm

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptm/metrics.hpp"

namespace ptm {

/// Inertia of a symmetric matrix plus its eigenvalues (descending).
struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;
  std::vector<double> eigenvalues;

  std::size_t size() const { return n_plus + n_zero + n_minus; }
  /// One character per eigenvalue in descending order, e.g. "++++++--".
  std::string pattern() const;
};

enum class Classification { Hilbert, AntiHilbert, Krein, Pontryagin, Singular };

std::string_view to_string(Classification c);

/// Relative zero threshold used when none is given.
inline constexpr double kDefaultZeroTol = 1e-8;

/// Eigenvalues with |e| <= zero_tol count as zero. The default threshold is
/// 1e-8 times the spectral radius.
Signature signature_of(const Matrix& theta, std::optional<double> zero_tol = std::nullopt);
Signature signature_of(const Metric& theta, std::optional<double> zero_tol = std::nullopt);

Classification classify(const Signature& sig);

/// Acceptable as a (pseudo)metric: invertible.
inline bool acceptable(Classification c) { return c != Classification::Singular; }

/// A run of (near-)equal eigenvalues.
struct Multiplet {
  double value = 0.0;  // first member of the run
  std::size_t multiplicity = 0;
};

/// Groups a descending list; consecutive values closer than
/// tol * max(1, max|e|) join the same multiplet.
std::vector<Multiplet> group_multiplicities(const std::vector<double>& descending,
                                            double tol = 1e-7);

}  // namespace ptm

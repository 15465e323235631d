#pragma once

#include <optional>
#include <vector>

#include "ptm/metrics.hpp"
#include "ptm/models.hpp"
#include "ptm/signature.hpp"

namespace ptm {

struct SweepRow {
  double lambda = 0.0;
  std::vector<Complex> eigenvalues;  // Hamiltonian: ascending; metric: descending, real
  bool all_real = false;
  std::optional<Signature> signature;
  std::optional<Classification> classification;
  std::vector<Multiplet> multiplets;  // metric rows only
};

/// Spectrum of `base` with its lambda replaced by each grid value and its
/// dimension set to n. Rows come back in grid order; evaluation is spread over
/// worker threads.
std::vector<SweepRow> spectrum_sweep(const HamiltonianSpec& base, std::size_t n,
                                     const std::vector<double>& lambda_grid);

/// Closed-form metric eigenvalues, multiplets, signature and classification
/// for each lambda (any order, duplicates allowed).
std::vector<SweepRow> metric_sweep(std::size_t n, const std::vector<double>& lambdas,
                                   MetricKind kind,
                                   std::optional<double> zero_tol = std::nullopt);

/// count equidistant points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Maximal sub-intervals of [lambda_min, lambda_max] on which the spectrum is
/// real and non-degenerate (minimum level gap >= 1e-7 max(1, max|E|)).
/// Boundaries between grid points are bisected to 1e-6; level crossings hidden
/// between grid points are located by golden-section search on the minimum gap.
std::vector<Interval> reality_domain(const HamiltonianSpec& base, std::size_t n,
                                     double lambda_min, double lambda_max,
                                     std::size_t resolution);

}  // namespace ptm

#include "ptm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace ptm {

namespace {

// Evaluates fn(0..count-1) on worker threads; results stay in index order and
// the lowest-index exception, if any, is rethrown.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn fn) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) {
          try {
            out[i] = fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

HamiltonianSpec at(const HamiltonianSpec& base, std::size_t n, double lambda) {
  HamiltonianSpec spec = base;
  spec.n = n;
  spec.lambda = lambda;
  return spec;
}

constexpr double kDegeneracyGap = 1e-7;
constexpr double kBoundaryWidth = 1e-6;
constexpr double kCrossingWidth = 1e-10;

struct Probe {
  bool ok = false;
  double gap = 0.0;  // minimum adjacent level spacing / max(1, max|E|)
};

Probe probe(const HamiltonianSpec& base, std::size_t n, double lambda) {
  Spectrum s;
  try {
    s = spectrum(at(base, n, lambda));
  } catch (const NumericalError&) {
    return {};
  }
  if (!s.real) return {};
  std::vector<double> re;
  double scale = 1.0;
  for (const auto& e : s.values) {
    re.push_back(e.real());
    scale = std::max(scale, std::abs(e.real()));
  }
  std::sort(re.begin(), re.end());
  double gap = INFINITY;
  for (std::size_t k = 1; k < re.size(); ++k) gap = std::min(gap, re[k] - re[k - 1]);
  gap /= scale;
  return {gap >= kDegeneracyGap, gap};
}

// good/bad are the endpoints where the predicate holds / fails.
double bisect_boundary(const HamiltonianSpec& base, std::size_t n, double good, double bad) {
  while (std::abs(good - bad) > kBoundaryWidth) {
    const double mid = 0.5 * (good + bad);
    if (probe(base, n, mid).ok) good = mid;
    else bad = mid;
  }
  return 0.5 * (good + bad);
}

// Golden-section minimization of the level gap on [a, b].
std::pair<double, double> minimize_gap(const HamiltonianSpec& base, std::size_t n, double a,
                                       double b) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = probe(base, n, c).gap;
  double fd = probe(base, n, d).gap;
  while (b - a > kCrossingWidth) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = probe(base, n, c).gap;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = probe(base, n, d).gap;
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) throw ArgumentError("linspace: count must be positive");
  if (count == 1) return {lo};
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k)
    grid[k] = lo + (hi - lo) * double(k) / double(count - 1);
  grid.back() = hi;
  return grid;
}

std::vector<SweepRow> spectrum_sweep(const HamiltonianSpec& base, std::size_t n,
                                     const std::vector<double>& lambda_grid) {
  if (lambda_grid.empty()) throw ArgumentError("spectrum_sweep: empty grid");
  for (std::size_t k = 1; k < lambda_grid.size(); ++k)
    if (!(lambda_grid[k] > lambda_grid[k - 1]))
      throw ArgumentError("spectrum_sweep: grid must be strictly increasing");
  validate(at(base, n, lambda_grid.front()));

  return parallel_map<SweepRow>(lambda_grid.size(), [&](std::size_t i) {
    const Spectrum s = spectrum(at(base, n, lambda_grid[i]));
    SweepRow row;
    row.lambda = lambda_grid[i];
    row.eigenvalues = s.values;
    row.all_real = s.real;
    return row;
  });
}

std::vector<SweepRow> metric_sweep(std::size_t n, const std::vector<double>& lambdas,
                                   MetricKind kind, std::optional<double> zero_tol) {
  return parallel_map<SweepRow>(lambdas.size(), [&](std::size_t i) {
    const Metric theta = closed_form(kind, n, lambdas[i]);
    SweepRow row;
    row.lambda = lambdas[i];
    row.signature = signature_of(theta, zero_tol);
    row.classification = classify(*row.signature);
    row.eigenvalues.assign(row.signature->eigenvalues.begin(), row.signature->eigenvalues.end());
    row.all_real = true;
    row.multiplets = group_multiplicities(row.signature->eigenvalues);
    return row;
  });
}

std::vector<Interval> reality_domain(const HamiltonianSpec& base, std::size_t n,
                                     double lambda_min, double lambda_max,
                                     std::size_t resolution) {
  if (!(lambda_min < lambda_max)) throw ArgumentError("reality_domain: empty range");
  if (resolution < 3) throw ArgumentError("reality_domain: resolution must be at least 3");
  validate(at(base, n, lambda_min));

  const std::vector<double> grid = linspace(lambda_min, lambda_max, resolution);
  const std::vector<Probe> probes =
      parallel_map<Probe>(grid.size(), [&](std::size_t i) { return probe(base, n, grid[i]); });

  std::vector<Interval> out;
  std::size_t i = 0;
  while (i < grid.size()) {
    if (!probes[i].ok) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < grid.size() && probes[j + 1].ok) ++j;

    double lo = i == 0 ? grid.front() : bisect_boundary(base, n, grid[i], grid[i - 1]);
    const double hi =
        j + 1 == grid.size() ? grid.back() : bisect_boundary(base, n, grid[j], grid[j + 1]);

    // Level crossings between grid points show up as local minima of the gap.
    for (std::size_t k = i + 1; k < j; ++k) {
      if (probes[k].gap > probes[k - 1].gap || probes[k].gap > probes[k + 1].gap) continue;
      const auto [where, gap] = minimize_gap(base, n, grid[k - 1], grid[k + 1]);
      if (gap < kDegeneracyGap && where > lo + kBoundaryWidth) {
        out.push_back({lo, where});
        lo = where;
      }
    }
    out.push_back({lo, hi});
    i = j + 1;
  }
  return out;
}

}  // namespace ptm

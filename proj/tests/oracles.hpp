#pragma once

// Reference computations used only by the tests. None of these share code
// paths with the library kernels they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ptm/matrix.hpp"

namespace oracle {

using ptm::Complex;
using ptm::ComplexMatrix;
using ptm::Matrix;

/// Number of eigenvalues of symmetric A strictly below x: count of negative
/// pivots in the unpivoted LDL^T factorization of A - xI (Sylvester's law).
inline std::size_t count_below(const Matrix& a, double x) {
  const std::size_t n = a.rows();
  std::vector<double> w(a.data().begin(), a.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return w[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) at(i, i) -= x;
  std::size_t negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = at(k, k);
    if (d == 0.0) d = 1e-300;
    if (d < 0.0) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = at(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return negatives;
}

/// All eigenvalues of symmetric A, descending, by bisection on count_below.
inline std::vector<double> bisection_eigenvalues(const Matrix& a) {
  const std::size_t n = a.rows();
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r += std::abs(a(i, j));
    lo = std::min(lo, a(i, i) - r);
    hi = std::max(hi, a(i, i) + r);
  }
  lo -= 1.0;
  hi += 1.0;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k-th smallest: smallest x with count_below(x) > k.
    double a0 = lo, b0 = hi;
    for (int it = 0; it < 200 && b0 - a0 > 1e-14 * std::max(1.0, std::abs(b0)); ++it) {
      const double mid = 0.5 * (a0 + b0);
      if (count_below(a, mid) > k) b0 = mid;
      else a0 = mid;
    }
    out[n - 1 - k] = 0.5 * (a0 + b0);
  }
  return out;
}

/// Numerical rank by Gaussian elimination with complete pivoting.
inline std::size_t pivoted_rank(const Matrix& a, double rel_tol = 1e-10) {
  Matrix w = a;
  const std::size_t m = w.rows(), n = w.cols();
  const double scale = ptm::max_abs(a);
  if (scale == 0.0) return 0;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    std::size_t pr = k, pc = k;
    double best = 0.0;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (std::abs(w(i, j)) > best) {
          best = std::abs(w(i, j));
          pr = i;
          pc = j;
        }
    if (best <= rel_tol * scale) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(pr, j));
    for (std::size_t i = 0; i < m; ++i) std::swap(w(i, k), w(i, pc));
    for (std::size_t i = k + 1; i < m; ++i) {
      const double f = w(i, k) / w(k, k);
      for (std::size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
    }
    ++rank;
  }
  return rank;
}

/// exp(A) by the plain Taylor series in 50-digit binary floating point,
/// no scaling; valid for the modest norms used in the tests.
inline ComplexMatrix expm_series(const ComplexMatrix& a) {
  using Real = boost::multiprecision::cpp_bin_float_50;
  const std::size_t n = a.rows();
  struct C {
    Real re, im;
  };
  using M = std::vector<C>;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  M base(n * n), term(n * n), sum(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      base[idx(i, j)] = {Real(a(i, j).real()), Real(a(i, j).imag())};
      term[idx(i, j)] = {Real(i == j ? 1 : 0), Real(0)};
      sum[idx(i, j)] = term[idx(i, j)];
    }
  const Real eps("1e-45");
  for (int k = 1; k < 2000; ++k) {
    M next(n * n, C{Real(0), Real(0)});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        const C& t = term[idx(i, l)];
        if (t.re == 0 && t.im == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const C& b = base[idx(l, j)];
          next[idx(i, j)].re += t.re * b.re - t.im * b.im;
          next[idx(i, j)].im += t.re * b.im + t.im * b.re;
        }
      }
    Real tnorm = 0, snorm = 0;
    for (std::size_t e = 0; e < n * n; ++e) {
      next[e].re /= k;
      next[e].im /= k;
      sum[e].re += next[e].re;
      sum[e].im += next[e].im;
      tnorm += abs(next[e].re) + abs(next[e].im);
      snorm += abs(sum[e].re) + abs(sum[e].im);
    }
    term = std::move(next);
    if (k > 5 && tnorm <= eps * snorm) break;
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = {static_cast<double>(sum[idx(i, j)].re), static_cast<double>(sum[idx(i, j)].im)};
  return out;
}

inline Matrix random_symmetric(std::size_t n, std::mt19937_64& gen, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(gen);
  return a;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen,
                            double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix a(rows, cols);
  for (double& x : a.data()) x = u(gen);
  return a;
}

}  // namespace oracle

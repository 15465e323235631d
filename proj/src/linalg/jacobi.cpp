#include <algorithm>
#include <cmath>
#include <numeric>

#include "ptm/linalg.hpp"

namespace ptm::linalg {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTol = 1e-13;
constexpr double kSymmetryTol = 1e-12;

double off_diagonal_norm(const Matrix& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (i != j) s += w(i, j) * w(i, j);
  return std::sqrt(s);
}

// Zeroes w(p,q) by a plane rotation applied on both sides; accumulates into v.
void rotate(Matrix& w, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = w(p, q);
  const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = w.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = w(k, p);
    const double akq = w(k, q);
    w(k, p) = c * akp - s * akq;
    w(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = w(p, k);
    const double aqk = w(q, k);
    w(p, k) = c * apk - s * aqk;
    w(q, k) = s * apk + c * aqk;
  }
  w(p, q) = 0.0;
  w(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigen eig_symmetric(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0)
    throw ArgumentError("eig_symmetric: expected a non-empty square matrix");
  if (!all_finite(a)) throw ArgumentError("eig_symmetric: non-finite entry");
  if (asymmetry(a) > kSymmetryTol) throw ArgumentError("eig_symmetric: matrix is not symmetric");

  const std::size_t n = a.rows();
  Matrix w = a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w(i, j) = w(j, i) = 0.5 * (a(i, j) + a(j, i));
  Matrix v = Matrix::identity(n);

  const double target = kOffTol * frobenius_norm(w);
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(w) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (w(p, q) != 0.0) rotate(w, v, p, q);
  }
  if (!converged && off_diagonal_norm(w) > target)
    throw NumericalError("eig_symmetric: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return w(x, x) > w(y, y); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = w(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace ptm::linalg

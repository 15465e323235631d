#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ptm/linalg.hpp"

namespace ptm::linalg {

namespace {

constexpr int kMaxSweeps = 80;

}  // namespace

Matrix null_space(const Matrix& a, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("null_space: tolerance must be positive");
  if (!all_finite(a)) throw ArgumentError("null_space: non-finite entry");

  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Columns of u are orthogonalized in place: A V = U with V orthogonal.
  Matrix u = a;
  Matrix v = Matrix::identity(n);
  const double eps = std::numeric_limits<double>::epsilon();
  // Columns already at roundoff level carry no information; rotating them
  // against each other just shuffles noise and never settles.
  const double negligible = eps * frobenius_norm(a);

  bool rotated = true;
  for (int sweep = 0; sweep < kMaxSweeps && rotated; ++sweep) {
    rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += u(i, p) * u(i, p);
          beta += u(i, q) * u(i, q);
          gamma += u(i, p) * u(i, q);
        }
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        if (std::sqrt(std::min(alpha, beta)) <= negligible) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double up = u(i, p);
          const double uq = u(i, q);
          u(i, p) = c * up - s * uq;
          u(i, q) = s * up + c * uq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
  }
  if (rotated) throw NumericalError("null_space: one-sided Jacobi did not converge");

  const double threshold = tol * max_abs(a);
  std::vector<std::size_t> kernel;
  for (std::size_t j = 0; j < n; ++j) {
    double sigma2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) sigma2 += u(i, j) * u(i, j);
    if (std::sqrt(sigma2) <= threshold) kernel.push_back(j);
  }

  Matrix basis(n, kernel.size());
  for (std::size_t k = 0; k < kernel.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) basis(i, k) = v(i, kernel[k]);
  return basis;
}

}  // namespace ptm::linalg

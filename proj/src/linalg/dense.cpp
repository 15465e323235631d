#include <cmath>
#include <utility>

#include "ptm/linalg.hpp"

namespace ptm {

double asymmetry(const Matrix& a) {
  if (!a.is_square()) throw ArgumentError("asymmetry: matrix is not square");
  const double scale = max_abs(a);
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
  return worst / scale;
}

ComplexMatrix to_complex(const Matrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) c.data()[k] = a.data()[k];
  return c;
}

namespace linalg {

namespace {

Matrix spectral_function(const Matrix& a, double (*f)(double)) {
  const SymmetricEigen eig = eig_symmetric(a);
  const std::size_t n = a.rows();
  const double radius = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
  if (eig.values.back() <= 1e-12 * radius)
    throw DomainError("matrix is not positive definite");

  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const double vik = eig.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * eig.vectors(j, k);
    }
  }
  // Exact symmetry of the result.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = 0.5 * (out(i, j) + out(j, i));
      out(i, j) = out(j, i) = m;
    }
  return out;
}

}  // namespace

Matrix sqrt_psd(const Matrix& a) {
  return spectral_function(a, [](double x) { return std::sqrt(x); });
}

Matrix inv_sqrt_psd(const Matrix& a) {
  return spectral_function(a, [](double x) { return 1.0 / std::sqrt(x); });
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw ArgumentError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Matrix w = a;
  Matrix inv = Matrix::identity(n);
  const double scale = max_abs(a);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
    if (std::abs(w(piv, col)) <= 1e-14 * scale || scale == 0.0)
      throw DomainError("inverse: matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(piv, j), w(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const double d = w(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      w(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = w(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        w(r, j) -= f * w(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace linalg
}  // namespace ptm

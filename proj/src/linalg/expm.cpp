#include <cmath>
#include <limits>

#include "ptm/linalg.hpp"

namespace ptm::linalg {

namespace {

double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

constexpr double kScaledNorm = 0.5;
constexpr int kMaxTerms = 60;

}  // namespace

ComplexMatrix expm(const ComplexMatrix& a) {
  if (!a.is_square()) throw ArgumentError("expm: matrix is not square");
  if (!all_finite(a)) throw ArgumentError("expm: non-finite entry");
  const std::size_t n = a.rows();

  int squarings = 0;
  const double norm = one_norm(a);
  if (norm > kScaledNorm) squarings = int(std::ceil(std::log2(norm / kScaledNorm)));
  const ComplexMatrix scaled = a * Complex(std::ldexp(1.0, -squarings), 0.0);

  const double eps = std::numeric_limits<double>::epsilon();
  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * scaled;
    term *= Complex(1.0 / k, 0.0);
    result += term;
    if (one_norm(term) <= 0.25 * eps * one_norm(result)) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace ptm::linalg

#include "ptm/hermitize.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ptm/linalg.hpp"
#include "ptm/signature.hpp"

namespace ptm {

namespace {

constexpr double kResidualTol = 1e-9;

void require_dieudonne(const Matrix& h, const Metric& theta) {
  const double res = dieudonne_residual(h, theta);
  if (!(res < kResidualTol * frobenius_norm(h)) && res != 0.0)
    throw DomainError("metric does not satisfy H^T Theta = Theta H (residual " +
                      std::to_string(res) + ")");
}

}  // namespace

HermitizationResult hermitize(const Matrix& h, const Metric& theta) {
  if (classify(signature_of(theta)) != Classification::Hilbert)
    throw DomainError("hermitize: metric is not positive definite");
  require_dieudonne(h, theta);

  HermitizationResult out;
  out.omega = linalg::sqrt_psd(theta.matrix);
  out.h = out.omega * h * linalg::inv_sqrt_psd(theta.matrix);
  out.symmetry_residual = frobenius_norm(out.h - out.h.transpose());

  Matrix sym = out.h;
  const std::size_t n = sym.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sym(i, j) = sym(j, i) = 0.5 * (out.h(i, j) + out.h(j, i));
  auto herm = linalg::eig_symmetric(sym).values;
  std::sort(herm.begin(), herm.end());
  const auto orig = linalg::eig_general(h).values;  // ascending
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(orig[k] - herm[k]));
  out.spectral_match_residual = worst;
  return out;
}

double crypto_hermiticity_residual(const Matrix& h, const Metric& theta) {
  return frobenius_norm(linalg::inverse(theta.matrix) * h.transpose() * theta.matrix - h);
}

Complex metric_inner(const ComplexVector& psi, const ComplexVector& phi, const Metric& theta) {
  const std::size_t n = theta.size();
  if (psi.size() != n || phi.size() != n) throw ArgumentError("metric_inner: dimension mismatch");
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < n; ++j) row += theta.matrix(i, j) * phi[j];
    sum += std::conj(psi[i]) * row;
  }
  return sum;
}

double evolve_norm_drift(const Matrix& h, const Metric& theta, const ComplexVector& psi0,
                         double t) {
  if (psi0.size() != h.rows()) throw ArgumentError("evolve: state dimension mismatch");
  if (!std::isfinite(t)) throw ArgumentError("evolve: time must be finite");
  require_dieudonne(h, theta);
  const ComplexMatrix generator = to_complex(h) * Complex(0.0, -t);
  const ComplexVector psi = linalg::expm(generator) * std::span<const Complex>(psi0);
  return std::abs(metric_inner(psi, psi, theta) - metric_inner(psi0, psi0, theta));
}

ComplexVector random_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto uniform = [&gen] { return double(gen() >> 11) * 0x1.0p-52 - 1.0; };
  ComplexVector psi(n);
  double norm2 = 0.0;
  for (auto& c : psi) {
    const double re = uniform();
    const double im = uniform();
    c = {re, im};
    norm2 += re * re + im * im;
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : psi) c *= scale;
  return psi;
}

}  // namespace ptm

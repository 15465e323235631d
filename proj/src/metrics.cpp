#include "ptm/metrics.hpp"

#include <cmath>
#include <string>

#include "ptm/linalg.hpp"

namespace ptm {

std::string describe(const Provenance& p) {
  struct Visitor {
    std::string operator()(const provenance::ClosedForm& c) const {
      return "closed-form(k=" + std::to_string(c.band) + ")";
    }
    std::string operator()(const provenance::NullSpaceElement& e) const {
      return "null-space(" + std::to_string(e.index) + ")";
    }
    std::string operator()(const provenance::Combination&) const { return "combination"; }
  };
  return std::visit(Visitor{}, p);
}

std::string_view to_string(MetricKind k) {
  switch (k) {
    case MetricKind::Diagonal: return "diagonal";
    case MetricKind::Bidiagonal: return "bidiagonal";
    case MetricKind::Tridiagonal: return "tridiagonal";
  }
  return "unknown";
}

MetricKind parse_metric_kind(std::string_view name) {
  for (MetricKind k : {MetricKind::Diagonal, MetricKind::Bidiagonal, MetricKind::Tridiagonal})
    if (to_string(k) == name) return k;
  throw ArgumentError("unknown metric kind '" + std::string(name) + "'");
}

Metric theta_diagonal(std::size_t n, double lambda) {
  if (n < 2) throw ArgumentError("theta_diagonal: n must be at least 2");
  if (lambda == -1.0) throw PoleError("theta_diagonal: alpha(lambda) has a pole at lambda = -1");
  const double alpha = (1.0 - lambda) / (1.0 + lambda);
  Matrix m = Matrix::identity(n);
  m(0, 0) = alpha;
  m(n - 1, n - 1) = alpha;
  return {std::move(m), provenance::ClosedForm{1}, {}};
}

Metric theta_bidiagonal(std::size_t n, double lambda) {
  if (n < 3) throw ArgumentError("theta_bidiagonal: n must be at least 3");
  const double beta = 1.0 - lambda;
  Matrix m(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) m(k, k + 1) = m(k + 1, k) = 1.0;
  m(0, 1) = m(1, 0) = beta;
  m(n - 2, n - 1) = m(n - 1, n - 2) = beta;
  return {std::move(m), provenance::ClosedForm{2}, {}};
}

Metric theta_tridiagonal(std::size_t n, double lambda) {
  if (n < 4) throw ArgumentError("theta_tridiagonal: n must be at least 4");
  const double denom = 1.0 + lambda * lambda;
  const double z = (1.0 - lambda) / denom;
  const double v = 1.0 / denom;
  Matrix m(n, n);
  for (std::size_t k = 1; k + 1 < n; ++k) m(k, k) = 1.0;
  m(0, 0) = m(n - 1, n - 1) = 0.0;
  m(1, 1) = m(n - 2, n - 2) = v;
  for (std::size_t k = 0; k + 2 < n; ++k) m(k, k + 2) = m(k + 2, k) = v;
  m(0, 2) = m(2, 0) = z;
  m(n - 3, n - 1) = m(n - 1, n - 3) = z;
  return {std::move(m), provenance::ClosedForm{3}, {}};
}

Metric closed_form(MetricKind kind, std::size_t n, double lambda) {
  switch (kind) {
    case MetricKind::Diagonal: return theta_diagonal(n, lambda);
    case MetricKind::Bidiagonal: return theta_bidiagonal(n, lambda);
    case MetricKind::Tridiagonal: return theta_tridiagonal(n, lambda);
  }
  throw ArgumentError("unknown metric kind");
}

double dieudonne_residual(const Matrix& h, const Matrix& theta) {
  if (!h.is_square() || !theta.is_square() || h.rows() != theta.rows())
    throw ArgumentError("dieudonne_residual: dimension mismatch");
  return frobenius_norm(h.transpose() * theta - theta * h);
}

double dieudonne_residual(const Matrix& h, const Metric& theta) {
  return dieudonne_residual(h, theta.matrix);
}

DieudonneSystem dieudonne_system(const Matrix& h, std::optional<std::size_t> max_bandwidth) {
  if (!h.is_square() || h.rows() == 0)
    throw ArgumentError("dieudonne_system: expected a non-empty square matrix");
  const std::size_t n = h.rows();
  const std::size_t band = max_bandwidth.value_or(n);

  DieudonneSystem sys;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n && j - i <= band; ++j) sys.coordinates.emplace_back(i, j);

  const std::size_t rows = n * (n - 1) / 2;
  sys.constraints = Matrix(rows, sys.coordinates.size());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (std::size_t c = 0; c < sys.coordinates.size(); ++c) {
    const auto [p, q] = sys.coordinates[c];
    const double w = p == q ? 1.0 : inv_sqrt2;
    // Image of S = w (E_pq + E_qp) (or E_pp) under S -> H^T S - S H,
    // read off on the strictly upper triangle.
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++r) {
        double hts = 0.0;  // (H^T S)_ij = sum_k H_ki S_kj
        double sh = 0.0;   // (S H)_ij = sum_k S_ik H_kj
        if (j == q) hts += h(p, i);
        if (p != q && j == p) hts += h(q, i);
        if (i == p) sh += h(q, j);
        if (p != q && i == q) sh += h(p, j);
        sys.constraints(r, c) = w * (hts - sh);
      }
  }
  return sys;
}

std::vector<Metric> solve_dieudonne_basis(const Matrix& h,
                                          std::optional<std::size_t> max_bandwidth) {
  const DieudonneSystem sys = dieudonne_system(h, max_bandwidth);
  const Matrix kernel = linalg::null_space(sys.constraints);
  const std::size_t n = h.rows();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<Metric> basis;
  basis.reserve(kernel.cols());
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    Matrix s(n, n);
    for (std::size_t c = 0; c < sys.coordinates.size(); ++c) {
      const auto [i, j] = sys.coordinates[c];
      const double x = kernel(c, k);
      if (i == j) {
        s(i, i) = x;
      } else {
        s(i, j) = s(j, i) = x * inv_sqrt2;
      }
    }
    const double cutoff = 1e-12 * max_abs(s);
    for (double x : s.data())
      if (std::abs(x) > cutoff) {
        if (x < 0.0) s *= -1.0;
        break;
      }
    basis.push_back({std::move(s), provenance::NullSpaceElement{k}, {}});
  }
  return basis;
}

Metric combine(const std::vector<Metric>& basis, const std::vector<double>& coeffs) {
  if (basis.size() != coeffs.size())
    throw ArgumentError("combine: basis and coefficient lists differ in length");
  if (basis.empty()) throw ArgumentError("combine: empty basis");
  const std::size_t n = basis.front().size();
  Matrix sum(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!std::isfinite(coeffs[k])) throw ArgumentError("combine: non-finite coefficient");
    if (basis[k].size() != n) throw ArgumentError("combine: basis dimensions differ");
    sum += basis[k].matrix * coeffs[k];
  }
  return {std::move(sum), provenance::Combination{}, coeffs};
}

}  // namespace ptm

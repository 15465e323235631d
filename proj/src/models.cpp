#include "ptm/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptm/linalg.hpp"

namespace ptm {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::AsymmetricSW: return "asym-sw";
    case Family::SymmetricSW: return "sym-sw";
    case Family::Chain: return "chain";
    case Family::Solvable: return "solvable";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::AsymmetricSW, Family::SymmetricSW, Family::Chain, Family::Solvable})
    if (to_string(f) == name) return f;
  throw ArgumentError("unknown model family '" + std::string(name) + "'");
}

void validate(const HamiltonianSpec& spec) {
  switch (spec.family) {
    case Family::AsymmetricSW:
    case Family::SymmetricSW:
      if (spec.n < 3) throw ArgumentError("square-well models need n >= 3");
      if (!std::isfinite(spec.lambda)) throw ArgumentError("lambda must be finite");
      break;
    case Family::Chain:
      if (spec.n < 2) throw ArgumentError("chain model needs n >= 2");
      if (spec.g.size() != spec.n / 2)
        throw ArgumentError("chain model needs floor(n/2) = " + std::to_string(spec.n / 2) +
                            " couplings, got " + std::to_string(spec.g.size()));
      if (!std::all_of(spec.g.begin(), spec.g.end(), [](double x) { return std::isfinite(x); }))
        throw ArgumentError("couplings must be finite");
      break;
    case Family::Solvable:
      if (spec.n < 2) throw ArgumentError("solvable model needs n >= 2");
      if (!std::isfinite(spec.a)) throw ArgumentError("a must be finite");
      break;
  }
}

namespace {

// Interior hopping -1; the first and last bonds carry the lambda-dependent
// corner entries. For n = 3 the middle row holds the second entry of both
// corner patterns.
Matrix square_well(std::size_t n, double first_up, double first_down, double last_up,
                   double last_down) {
  Matrix h(n, n);
  for (std::size_t k = 0; k < n; ++k) h(k, k) = 2.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h(k, k + 1) = -1.0;
    h(k + 1, k) = -1.0;
  }
  h(0, 1) = first_up;
  h(1, 0) = first_down;
  h(n - 2, n - 1) = last_up;
  h(n - 1, n - 2) = last_down;
  return h;
}

}  // namespace

Matrix build(const HamiltonianSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  const double l = spec.lambda;
  switch (spec.family) {
    case Family::AsymmetricSW:
      return square_well(n, -1.0 - l, -1.0 + l, -1.0 + l, -1.0 - l);
    case Family::SymmetricSW:
      return square_well(n, -1.0 - l, -1.0 + l, -1.0 - l, -1.0 + l);
    case Family::Chain: {
      Matrix h(n, n);
      for (std::size_t k = 0; k < n; ++k) h(k, k) = 2.0 * double(k) + 1.0 - double(n);
      // Mirrored couplings: g1, g2, ..., g2, g1 (middle one used once for even n).
      for (std::size_t k = 0; k + 1 < n; ++k) {
        const double g = spec.g[std::min(k, n - 2 - k)];
        h(k, k + 1) = g;
        h(k + 1, k) = -g;
      }
      return h;
    }
    case Family::Solvable: {
      Matrix h(n, n);
      for (std::size_t k = 0; k < n; ++k) h(k, k) = spec.a + 2.0 * double(k) + 1.0;
      for (std::size_t k = 1; k < n; ++k) {
        h(k - 1, k) = -double(k);
        h(k, k - 1) = -(spec.a + double(k));
      }
      return h;
    }
  }
  throw ArgumentError("unknown model family");
}

Spectrum spectrum_of(const Matrix& h) {
  Spectrum s;
  s.values = linalg::eig_general(h).values;
  double max_im = 0.0, max_re = 0.0;
  for (const auto& e : s.values) {
    max_im = std::max(max_im, std::abs(e.imag()));
    max_re = std::max(max_re, std::abs(e.real()));
  }
  s.real = max_im < 1e-9 * (1.0 + max_re);
  return s;
}

Spectrum spectrum(const HamiltonianSpec& spec) { return spectrum_of(build(spec)); }

}  // namespace ptm

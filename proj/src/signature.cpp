#include "ptm/signature.hpp"

#include <cmath>

#include "ptm/linalg.hpp"

namespace ptm {

std::string Signature::pattern() const {
  return std::string(n_plus, '+') + std::string(n_zero, '0') + std::string(n_minus, '-');
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Hilbert: return "Hilbert";
    case Classification::AntiHilbert: return "AntiHilbert";
    case Classification::Krein: return "Krein";
    case Classification::Pontryagin: return "Pontryagin";
    case Classification::Singular: return "Singular";
  }
  return "unknown";
}

Signature signature_of(const Matrix& theta, std::optional<double> zero_tol) {
  if (zero_tol && !(*zero_tol >= 0.0)) throw ArgumentError("zero tolerance must be non-negative");
  Signature sig;
  sig.eigenvalues = linalg::eig_symmetric(theta).values;
  const double radius =
      std::max(std::abs(sig.eigenvalues.front()), std::abs(sig.eigenvalues.back()));
  const double threshold = zero_tol.value_or(kDefaultZeroTol * radius);
  for (double e : sig.eigenvalues) {
    if (std::abs(e) <= threshold) ++sig.n_zero;
    else if (e > 0.0) ++sig.n_plus;
    else ++sig.n_minus;
  }
  return sig;
}

Signature signature_of(const Metric& theta, std::optional<double> zero_tol) {
  return signature_of(theta.matrix, zero_tol);
}

Classification classify(const Signature& sig) {
  if (sig.n_zero > 0) return Classification::Singular;
  if (sig.n_minus == 0) return Classification::Hilbert;
  if (sig.n_plus == 0) return Classification::AntiHilbert;
  if (sig.n_plus == sig.n_minus) return Classification::Krein;
  return Classification::Pontryagin;
}

std::vector<Multiplet> group_multiplicities(const std::vector<double>& descending, double tol) {
  std::vector<Multiplet> out;
  if (descending.empty()) return out;
  double scale = 1.0;
  for (double e : descending) scale = std::max(scale, std::abs(e));
  const double gap = tol * scale;
  double previous = descending.front();
  out.push_back({previous, 1});
  for (std::size_t k = 1; k < descending.size(); ++k) {
    const double e = descending[k];
    if (std::abs(previous - e) < gap) {
      ++out.back().multiplicity;
    } else {
      out.push_back({e, 1});
    }
    previous = e;
  }
  return out;
}

}  // namespace ptm

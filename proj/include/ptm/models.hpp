#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ptm/matrix.hpp"

namespace ptm {

/// Tridiagonal Hamiltonian families.
enum class Family {
  AsymmetricSW,  // square well, corner couplings -1 -+ lambda flipped at the far end
  SymmetricSW,   // square well, identical corner couplings at both ends
  Chain,         // equidistant diagonal, antisymmetric mirrored couplings g_j
  Solvable,      // diagonal a+1, a+3, ...; couplings -k above, -(a+k) below
};

std::string_view to_string(Family f);
/// Accepts asym-sw, sym-sw, chain, solvable. ArgumentError otherwise.
Family parse_family(std::string_view name);

struct HamiltonianSpec {
  Family family = Family::AsymmetricSW;
  std::size_t n = 0;
  double lambda = 0.0;        // SW families
  double a = 0.0;             // Solvable
  std::vector<double> g;      // Chain, length n / 2

  static HamiltonianSpec asymmetric_sw(std::size_t n, double lambda) {
    return {Family::AsymmetricSW, n, lambda, 0.0, {}};
  }
  static HamiltonianSpec symmetric_sw(std::size_t n, double lambda) {
    return {Family::SymmetricSW, n, lambda, 0.0, {}};
  }
  static HamiltonianSpec chain(std::size_t n, std::vector<double> g) {
    return {Family::Chain, n, 0.0, 0.0, std::move(g)};
  }
  static HamiltonianSpec solvable(std::size_t n, double a) {
    return {Family::Solvable, n, 0.0, a, {}};
  }
};

/// Throws ArgumentError when n is below the family minimum (3 for the square
/// wells, 2 otherwise), a parameter is non-finite, or g has the wrong length.
void validate(const HamiltonianSpec& spec);

Matrix build(const HamiltonianSpec& spec);

struct Spectrum {
  std::vector<Complex> values;  // ascending by real part
  bool real = false;            // max|Im E| < 1e-9 (1 + max|Re E|)
};

Spectrum spectrum(const HamiltonianSpec& spec);
Spectrum spectrum_of(const Matrix& h);

}  // namespace ptm

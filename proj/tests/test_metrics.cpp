#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ptm/errors.hpp"
#include "ptm/linalg.hpp"
#include "ptm/metrics.hpp"
#include "ptm/models.hpp"

using namespace ptm;

namespace {

Matrix well(std::size_t n, double l) { return build(HamiltonianSpec::asymmetric_sw(n, l)); }

// Distance of m from span(basis), basis Frobenius-orthonormal.
double distance_from_span(const Matrix& m, const std::vector<Metric>& basis) {
  Matrix rest = m;
  for (const Metric& b : basis) {
    double dot = 0.0;
    for (std::size_t k = 0; k < m.data().size(); ++k) dot += m.data()[k] * b.matrix.data()[k];
    rest -= dot * b.matrix;
  }
  return frobenius_norm(rest);
}

bool is_symmetric(const Matrix& m) { return asymmetry(m) <= 1e-12; }

}  // namespace

TEST_SUITE("closed forms") {
  TEST_CASE("diagonal") {
    CHECK(theta_diagonal(8, 0.0).matrix == Matrix::identity(8));
    const Matrix d = theta_diagonal(4, 0.5).matrix;
    CHECK(std::abs(d(0, 0) - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(d(3, 3) - 1.0 / 3.0) < 1e-15);
    CHECK(d(1, 1) == 1);
    CHECK(d(2, 2) == 1);
    CHECK(d(0, 1) == 0);
    CHECK_THROWS_AS(theta_diagonal(4, -1.0), PoleError);
    CHECK(std::get<provenance::ClosedForm>(theta_diagonal(4, 0.2).provenance).band == 1);
  }

  TEST_CASE("bidiagonal") {
    const Matrix b = theta_bidiagonal(6, 0.25).matrix;
    CHECK(b(0, 1) == 0.75);
    CHECK(b(4, 5) == 0.75);
    for (std::size_t k = 1; k + 2 < 6; ++k) CHECK(b(k, k + 1) == 1);
    for (std::size_t k = 0; k < 6; ++k) CHECK(b(k, k) == 0);
    CHECK(b(0, 2) == 0);
    CHECK(is_symmetric(b));
    const Matrix b3 = theta_bidiagonal(3, 0.4).matrix;
    CHECK(b3(0, 1) == 0.6);
    CHECK(b3(1, 2) == 0.6);
  }

  TEST_CASE("bidiagonal eigenvalue samples at N = 8") {
    const std::vector<double> beta1{1.87938524, 1.53208889, 1, 0.347296355,
                                    -0.347296355, -1, -1.53208889, -1.87938524};
    const std::vector<double> beta002{1.80196162, 1.24709165, 0.445529554, 0.00039952,
                                      -0.00039952, -0.445529554, -1.24709165, -1.80196162};
    const auto e1 = linalg::eig_symmetric(theta_bidiagonal(8, 0.0).matrix).values;
    const auto e2 = linalg::eig_symmetric(theta_bidiagonal(8, 0.98).matrix).values;
    for (std::size_t k = 0; k < 8; ++k) {
      CHECK(std::abs(e1[k] - beta1[k]) < 5e-8);
      CHECK(std::abs(e2[k] - beta002[k]) < 5e-8);
    }
  }

  TEST_CASE("tridiagonal pattern") {
    const double l = 0.5;
    const double z = (1 - l) / (1 + l * l), v = 1 / (1 + l * l);
    const Matrix t = theta_tridiagonal(7, l).matrix;
    const std::vector<double> main{0, v, 1, 1, 1, v, 0};
    const std::vector<double> second{z, v, v, v, z};
    for (std::size_t k = 0; k < 7; ++k) CHECK(t(k, k) == doctest::Approx(main[k]).epsilon(1e-15));
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(t(k, k + 2) == doctest::Approx(second[k]).epsilon(1e-15));
      CHECK(t(k + 2, k) == t(k, k + 2));
    }
    for (std::size_t k = 0; k + 1 < 7; ++k) CHECK(t(k, k + 1) == 0);
    CHECK(t(0, 3) == 0);
    CHECK_THROWS_AS(theta_tridiagonal(3, 0.1), ArgumentError);
  }

  TEST_CASE("tridiagonal table1 samples") {
    struct Row {
      double lambda;
      std::vector<double> pairs;
    };
    for (const Row& r : {Row{0.0, {2.53208889, 1.34729636, 0, -0.879385241}},
                         Row{0.5, {2.10869763, 0.981936410, 0.0376599205, -0.328293960}},
                         Row{1.0, {1.62348980, 0.777479066, 0.099031132, 0}}}) {
      const auto e = linalg::eig_symmetric(theta_tridiagonal(8, r.lambda).matrix).values;
      std::vector<double> want;
      for (double p : r.pairs) want.insert(want.end(), {p, p});
      std::sort(want.rbegin(), want.rend());
      for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(e[k] - want[k]) < 5e-7);
    }
  }

  TEST_CASE("kind names") {
    for (MetricKind k : {MetricKind::Diagonal, MetricKind::Bidiagonal, MetricKind::Tridiagonal})
      CHECK(parse_metric_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_metric_kind("pentadiagonal"), ArgumentError);
  }
}

TEST_SUITE("dieudonne_residual") {
  TEST_CASE("examples") {
    CHECK(dieudonne_residual(well(6, 0.3), theta_tridiagonal(6, 0.3)) < 1e-12);
    CHECK(dieudonne_residual(well(6, 0.3), Matrix::identity(6)) > 0.1);
    CHECK(dieudonne_residual(well(5, 0.0), Matrix::identity(5)) == 0.0);
    CHECK_THROWS_AS(dieudonne_residual(well(5, 0.0), Matrix::identity(4)), ArgumentError);
  }

  TEST_CASE("all closed forms over the family grid") {
    for (std::size_t n = 4; n <= 10; ++n)
      for (double l : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
        const Matrix h = well(n, l);
        const double bound = 1e-12 * (1 + frobenius_norm(h));
        for (MetricKind k : {MetricKind::Diagonal, MetricKind::Bidiagonal, MetricKind::Tridiagonal})
          CHECK(dieudonne_residual(h, closed_form(k, n, l)) < bound);
      }
  }
}

TEST_SUITE("solve_dieudonne_basis") {
  TEST_CASE("constraint matrix shape") {
    const auto sys = dieudonne_system(well(5, 0.2));
    CHECK(sys.constraints.rows() == 10);
    CHECK(sys.constraints.cols() == 15);
    CHECK(sys.coordinates.size() == 15);
    const auto band1 = dieudonne_system(well(5, 0.2), 1);
    CHECK(band1.constraints.cols() == 9);
  }

  TEST_CASE("N = 4, lambda = 0.5: full, diagonal-only and bidiagonal-only") {
    const Matrix h = well(4, 0.5);
    const auto full = solve_dieudonne_basis(h);
    CHECK(full.size() == 4);
    CHECK(full.size() == 10 - oracle::pivoted_rank(dieudonne_system(h).constraints));

    const auto diag = solve_dieudonne_basis(h, 0);
    REQUIRE(diag.size() == 1);
    const Matrix d = theta_diagonal(4, 0.5).matrix;
    CHECK(distance_from_span(d, diag) < 1e-9 * frobenius_norm(d));

    const auto band1 = solve_dieudonne_basis(h, 1);
    REQUIRE(band1.size() == 2);
    CHECK(distance_from_span(d, band1) < 1e-9 * frobenius_norm(d));
    const Matrix b = theta_bidiagonal(4, 0.5).matrix;
    CHECK(distance_from_span(b, band1) < 1e-9 * frobenius_norm(b));
  }

  TEST_CASE("elements are normalized solutions with fixed sign") {
    const Matrix h = well(6, 0.3);
    const auto basis = solve_dieudonne_basis(h);
    REQUIRE(basis.size() == 6);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Matrix& m = basis[k].matrix;
      CHECK(is_symmetric(m));
      CHECK(std::abs(frobenius_norm(m) - 1.0) < 1e-12);
      CHECK(dieudonne_residual(h, basis[k]) < 1e-9 * frobenius_norm(h));
      CHECK(std::get<provenance::NullSpaceElement>(basis[k].provenance).index == k);
      const double scale = max_abs(m);
      for (double x : m.data())
        if (std::abs(x) > 1e-12 * scale) {
          CHECK(x > 0);
          break;
        }
      for (std::size_t j = 0; j < k; ++j) {
        double dot = 0.0;
        for (std::size_t e = 0; e < 36; ++e) dot += m.data()[e] * basis[j].matrix.data()[e];
        CHECK(std::abs(dot) < 1e-12);
      }
    }
  }

  TEST_CASE("closed forms lie in the span of the matching bandwidth") {
    for (std::size_t n = 4; n <= 9; ++n)
      for (double l : {-0.6, 0.2, 0.7}) {
        const Matrix h = well(n, l);
        const Matrix t = theta_tridiagonal(n, l).matrix;
        CHECK(distance_from_span(t, solve_dieudonne_basis(h, 2)) < 1e-9 * frobenius_norm(t));
        const Matrix b = theta_bidiagonal(n, l).matrix;
        CHECK(distance_from_span(b, solve_dieudonne_basis(h, 1)) < 1e-9 * frobenius_norm(b));
      }
  }

  TEST_CASE("dimension equals N for non-degenerate spectra, exceeds it at lambda = 1, even N") {
    for (std::size_t n = 3; n <= 9; ++n) {
      for (double l : {-0.9, -0.3, 0.0, 0.4, 0.8}) {
        const Matrix h = well(n, l);
        const std::size_t oracle_dim =
            n * (n + 1) / 2 - oracle::pivoted_rank(dieudonne_system(h).constraints);
        CHECK(oracle_dim == n);
        CHECK(solve_dieudonne_basis(h).size() == n);
      }
      if (n % 2 == 0) {
        const Matrix h = well(n, 1.0);
        const std::size_t dim = solve_dieudonne_basis(h).size();
        CHECK(dim > n);
        CHECK(dim == n * (n + 1) / 2 - oracle::pivoted_rank(dieudonne_system(h).constraints));
      }
    }
  }

  TEST_CASE("bandwidth restriction may leave nothing") {
    // A non-symmetric H with no diagonal solution.
    const Matrix h{{1, 2, 0}, {0, 3, 1}, {5, 0, 2}};
    CHECK(solve_dieudonne_basis(h, 0).empty());
  }
}

TEST_SUITE("combine") {
  TEST_CASE("single element, coefficient 1") {
    const Metric d = theta_diagonal(5, 0.2);
    const Metric c = combine({d}, {1.0});
    CHECK(c.matrix == d.matrix);
    CHECK(std::holds_alternative<provenance::Combination>(c.provenance));
    CHECK(c.coefficients == std::vector<double>{1.0});
  }

  TEST_CASE("positive and Krein combinations at N = 6, lambda = 0.3") {
    const std::vector<Metric> b{theta_diagonal(6, 0.3), theta_bidiagonal(6, 0.3)};
    const auto pos = linalg::eig_symmetric(combine(b, {1.0, 0.1}).matrix).values;
    CHECK(pos.back() > 0);
    const auto krein = linalg::eig_symmetric(combine(b, {0.0, 1.0}).matrix).values;
    std::size_t plus = 0, minus = 0;
    for (double e : krein) (e > 0 ? plus : minus)++;
    CHECK(plus == 3);
    CHECK(minus == 3);
  }

  TEST_CASE("linearity of the residual") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(-2, 2);
    for (std::size_t n = 4; n <= 8; ++n) {
      const Matrix h = well(n, 0.45);
      const auto basis = solve_dieudonne_basis(h);
      std::vector<double> c(basis.size());
      double bound = 1e-12;
      for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = u(gen);
        bound += std::abs(c[k]) * dieudonne_residual(h, basis[k]);
      }
      CHECK(dieudonne_residual(h, combine(basis, c)) <= bound + 1e-12);
    }
  }

  TEST_CASE("errors") {
    const Metric d = theta_diagonal(4, 0.2);
    CHECK_THROWS_AS(combine({d}, {1.0, 2.0}), ArgumentError);
    CHECK_THROWS_AS(combine({d}, {INFINITY}), ArgumentError);
    CHECK_THROWS_AS(combine({d, theta_diagonal(5, 0.2)}, {1.0, 1.0}), ArgumentError);
  }
}

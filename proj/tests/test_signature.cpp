#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ptm/errors.hpp"
#include "ptm/linalg.hpp"
#include "ptm/signature.hpp"

using namespace ptm;

namespace {

Signature sig(std::size_t p, std::size_t z, std::size_t m) { return {p, z, m, {}}; }

// Random P with condition number <= 100: Q1 diag(s) Q2, s in [1, 100].
Matrix well_conditioned(std::size_t n, std::mt19937_64& gen) {
  const auto q1 = linalg::eig_symmetric(oracle::random_symmetric(n, gen)).vectors;
  const auto q2 = linalg::eig_symmetric(oracle::random_symmetric(n, gen)).vectors;
  std::uniform_real_distribution<double> u(1.0, 100.0);
  std::vector<double> s(n);
  for (double& x : s) x = u(gen);
  s.front() = 1.0;
  return q1 * Matrix::diagonal(s) * q2;
}

}  // namespace

TEST_SUITE("signature_of") {
  TEST_CASE("table1 examples") {
    const Signature a = signature_of(theta_tridiagonal(8, -1.0));
    CHECK(a.n_plus == 6);
    CHECK(a.n_zero == 0);
    CHECK(a.n_minus == 2);
    CHECK(a.pattern() == "++++++--");
    const Signature b = signature_of(theta_tridiagonal(8, 0.0));
    CHECK(b.pattern() == "++++00--");
    CHECK(signature_of(Matrix::identity(8)).pattern() == "++++++++");
  }

  TEST_CASE("all table1 signatures") {
    const std::vector<std::pair<double, std::string>> rows{
        {-1, "++++++--"},  {-0.5, "++++++--"}, {0, "++++00--"},  {0.5, "++++++--"},
        {0.95, "++++++--"}, {1, "++++++00"},   {1.1, "++++++--"}, {2, "++++++--"},
        {200, "++++++--"}, {-200, "++++++--"}};
    for (const auto& [l, pattern] : rows) {
      const Signature s = signature_of(theta_tridiagonal(8, l));
      CHECK(s.pattern() == pattern);
      CHECK(s.size() == 8);
    }
  }

  TEST_CASE("eigenvalues descending, explicit zero tolerance") {
    const Matrix m = Matrix::diagonal(std::vector<double>{1e-6, -2, 3});
    const Signature s = signature_of(m);
    CHECK(s.eigenvalues == std::vector<double>{3, 1e-6, -2});
    CHECK(s.pattern() == "++-");
    CHECK(signature_of(m, 1e-5).pattern() == "+0-");
    CHECK_THROWS_AS(signature_of(m, -1.0), ArgumentError);
  }

  TEST_CASE("scale invariance") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix a = oracle::random_symmetric(2 + trial % 7, gen);
      const Signature s = signature_of(a);
      const Signature up = signature_of(7.5 * a);
      const Signature down = signature_of(-0.25 * a);
      CHECK(up.n_plus == s.n_plus);
      CHECK(up.n_minus == s.n_minus);
      CHECK(down.n_plus == s.n_minus);
      CHECK(down.n_minus == s.n_plus);
    }
  }

  TEST_CASE("Sylvester congruence invariance") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 2 + trial % 7;
      const Matrix theta = oracle::random_symmetric(n, gen);
      const Matrix p = well_conditioned(n, gen);
      const Signature s = signature_of(theta);
      const Signature t = signature_of(p.transpose() * theta * p);
      CHECK(s.n_plus == t.n_plus);
      CHECK(s.n_zero == t.n_zero);
      CHECK(s.n_minus == t.n_minus);
    }
  }
}

TEST_SUITE("classify") {
  TEST_CASE("rule") {
    CHECK(classify(sig(4, 0, 4)) == Classification::Krein);
    CHECK(classify(sig(6, 0, 2)) == Classification::Pontryagin);
    CHECK(classify(sig(2, 0, 6)) == Classification::Pontryagin);
    CHECK(classify(sig(6, 2, 0)) == Classification::Singular);
    CHECK(classify(sig(4, 2, 2)) == Classification::Singular);
    CHECK(classify(sig(8, 0, 0)) == Classification::Hilbert);
    CHECK(classify(sig(0, 0, 8)) == Classification::AntiHilbert);
    CHECK_FALSE(acceptable(Classification::Singular));
    CHECK(acceptable(Classification::Pontryagin));
    CHECK(to_string(Classification::Pontryagin) == "Pontryagin");
  }

  TEST_CASE("diagonal metric is Hilbert inside (-1, 1)") {
    for (std::size_t n = 2; n <= 12; ++n)
      for (double l : {-0.99, -0.5, 0.0, 0.3, 0.99})
        CHECK(classify(signature_of(theta_diagonal(n, l))) == Classification::Hilbert);
  }

  TEST_CASE("bidiagonal metric is Krein below lambda = 1") {
    for (std::size_t n = 3; n <= 12; ++n)
      for (double l : {-2.0, -0.5, 0.0, 0.5, 0.98}) {
        const Signature s = signature_of(theta_bidiagonal(n, l));
        if (n % 2 == 0) {
          CHECK(classify(s) == Classification::Krein);
        } else {
          // Odd n: sign-symmetric spectrum forces one exact zero.
          CHECK(s.n_plus == s.n_minus);
          CHECK(s.n_zero == 1);
        }
      }
  }
}

TEST_SUITE("group_multiplicities") {
  TEST_CASE("table1 pairs") {
    const auto e = linalg::eig_symmetric(theta_tridiagonal(8, 0.5).matrix).values;
    const auto groups = group_multiplicities(e);
    REQUIRE(groups.size() == 4);
    for (const auto& g : groups) CHECK(g.multiplicity == 2);
  }

  TEST_CASE("simple runs") {
    const auto g = group_multiplicities({3 + 1e-9, 3, 1, -1, -1});
    REQUIRE(g.size() == 3);
    CHECK(g[0].multiplicity == 2);
    CHECK(g[1].multiplicity == 1);
    CHECK(g[2].value == -1);
    CHECK(g[2].multiplicity == 2);
    CHECK(group_multiplicities({}).empty());
  }
}

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "genergy/error.hpp"
#include "genergy/graph.hpp"
#include "genergy/spectrum.hpp"
#include "test_support.hpp"

using namespace genergy;
using doctest::Approx;

TEST_CASE("jacobi_eigh on small closed forms") {
  const double d[] = {3.0, 1.0};
  auto e = jacobi_eigh(DenseMatrix::diagonal(d));
  CHECK(e.eigenvalues == std::vector<double>{3.0, 1.0});

  e = jacobi_eigh(adjacency(complete(2)));
  CHECK(e.eigenvalues[0] == Approx(1.0).epsilon(1e-15));
  CHECK(e.eigenvalues[1] == Approx(-1.0).epsilon(1e-15));

  // Diagonal input in ascending order comes back sorted, basis permuted along.
  const double up[] = {-2.0, 0.5, 7.0};
  e = jacobi_eigh(DenseMatrix::diagonal(up));
  CHECK(e.eigenvalues == std::vector<double>{7.0, 0.5, -2.0});
  CHECK(e.basis(2, 0) == 1.0);
  CHECK(e.basis(0, 2) == 1.0);
}

TEST_CASE("jacobi_eigh invariants on random symmetric matrices") {
  SplitMix64 rng(8);
  for (std::size_t n : {1, 2, 3, 8, 17, 30}) {
    const auto s = testing::random_symmetric(rng, n);
    const auto e = jacobi_eigh(s);
    CHECK(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
    CHECK(testing::reconstruction_residual(s, e.basis, e.eigenvalues) <= 1e-10 * frobenius_norm(s));
    CHECK(testing::orthogonality_defect(e.basis) <= 1e-10);
    CHECK(jacobi_eigenvalues(s) == e.eigenvalues);
  }
}

TEST_CASE("jacobi_eigh errors") {
  CHECK_THROWS_AS(jacobi_eigh(DenseMatrix::constant(2, 3, 1.0)), DimensionError);
  CHECK_THROWS_AS(jacobi_eigh(DenseMatrix::from_rows({{1, 2}, {0, 1}})), SymmetryError);
  // Asymmetry at roundoff level is averaged away.
  const auto nearly = DenseMatrix::from_rows({{1, 2}, {2 + 1e-15, 1}});
  CHECK(jacobi_eigh(nearly).eigenvalues[0] == Approx(3.0));
}

TEST_CASE("zero and 1x1 matrices") {
  CHECK(jacobi_eigh(DenseMatrix::zeros(4, 4)).eigenvalues == std::vector<double>(4, 0.0));
  CHECK(singular_values(DenseMatrix::zeros(2, 5)).values == std::vector<double>(2, 0.0));
  CHECK(singular_values(DenseMatrix::from_rows({{-3.0}})).values == std::vector<double>{3.0});
}

TEST_CASE("singular_values examples") {
  auto sv = singular_values(DenseMatrix::identity(2)).values;
  CHECK(sv[0] == Approx(1.0));
  CHECK(sv[1] == Approx(1.0));

  sv = singular_values(DenseMatrix::constant(2, 3, 1.0)).values;
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == Approx(std::sqrt(6.0)).epsilon(1e-14));
  CHECK(sv[1] == Approx(0.0).epsilon(1e-7));

  // Oracle: A^T A has characteristic polynomial l^2 - 30 l + 4.
  const double disc = std::sqrt(30.0 * 30.0 - 16.0);
  const double s1 = std::sqrt((30.0 + disc) / 2.0);
  const double s2 = std::sqrt((30.0 - disc) / 2.0);
  sv = singular_values(DenseMatrix::from_rows({{1, 2}, {3, 4}})).values;
  CHECK(sv[0] == Approx(s1).epsilon(1e-13));
  CHECK(sv[1] == Approx(s2).epsilon(1e-12));
  CHECK(sv[0] == Approx(5.46499).epsilon(1e-6));
  CHECK(sv[1] == Approx(0.36597).epsilon(1e-5));

  // Tall input uses A^T A and still returns min(m, n) values.
  CHECK(singular_values(DenseMatrix::constant(5, 2, 1.0)).values.size() == 2);
}

TEST_CASE("singular_values_symmetric examples") {
  auto sv = singular_values_symmetric(adjacency(cycle(4))).values;
  const double expected_c4[] = {2, 2, 0, 0};
  for (int i = 0; i < 4; ++i) CHECK(sv[i] == Approx(expected_c4[i]).scale(1.0).epsilon(1e-12));

  const double d[] = {-5.0, 3.0};
  CHECK(singular_values_symmetric(DenseMatrix::diagonal(d)).values == std::vector<double>{5.0, 3.0});

  const auto pet = adjacency(petersen());
  const auto sym = singular_values_symmetric(pet).values;
  const auto gram = singular_values(pet).values;
  const double expected[] = {3, 2, 2, 2, 2, 1, 1, 1, 1, 1};
  for (int i = 0; i < 10; ++i) {
    CHECK(std::abs(sym[i] - expected[i]) <= 1e-10);
    CHECK(std::abs(sym[i] - gram[i]) <= 1e-8);
  }
}

TEST_CASE("property: trace identity and route agreement") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.next() % 10, n = 1 + rng.next() % 10;
    const auto a = testing::random_matrix(rng, m, n, -3.0, 3.0);
    const auto sv = singular_values(a);
    const double tr = gram_trace(a);
    CHECK(sv.values.size() == std::min(m, n));
    CHECK(std::is_sorted(sv.values.rbegin(), sv.values.rend()));
    CHECK(sv.values.back() >= 0.0);
    CHECK(std::abs(sv.sum_of_squares() - tr) <= 1e-8 * std::max(1.0, tr));

    const auto s = testing::random_symmetric(rng, 1 + rng.next() % 12, -2.0, 2.0);
    const auto g = singular_values(s).values;
    const auto h = singular_values_symmetric(s).values;
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(std::abs(g[i] - h[i]) <= 1e-7 * std::max(1.0, h[0]));
  }
}

TEST_CASE("property: permutation, transpose and scaling invariance") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + rng.next() % 8, n = 2 + rng.next() % 8;
    const auto a = testing::random_matrix(rng, m, n, -1.0, 1.0);
    const auto base = singular_values(a).values;

    const auto permuted = testing::permute(a, testing::random_permutation(rng, m),
                                           testing::random_permutation(rng, n));
    const auto p = singular_values(permuted).values;
    const auto t = singular_values(a.transposed()).values;
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(std::abs(p[i] - base[i]) <= 1e-9);
      CHECK(std::abs(t[i] - base[i]) <= 1e-9);
    }
    for (double c : {-2.0, 0.5, 10.0}) {
      const auto sc = singular_values(a.scaled(c)).values;
      for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(std::abs(sc[i] - std::abs(c) * base[i]) <= 1e-9 * std::abs(c) * base[0]);
    }
  }
}

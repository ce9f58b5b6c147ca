#include <doctest.h>

#include <random>

#include "loopdual/linalg.hpp"

using namespace loopdual;

namespace {

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j)
      if (i != j && d[i][j] != 0) return false;
  return true;
}

Scalar det_int(const IntMatrix& m) { return determinant(to_scalar(m)); }

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  CHECK(smith_normal_form({{2}}).invariant_factors() == IntVector{2});
  CHECK(smith_normal_form({{2, 0}, {0, 1}}).invariant_factors() == IntVector{1, 2});
  // gcd of entries is 2, determinant is 4
  CHECK(smith_normal_form({{4, 6}, {2, 4}}).invariant_factors() == IntVector{2, 2});
  CHECK(smith_normal_form({{1, -1}}).invariant_factors() == IntVector{1});
  CHECK(smith_normal_form({{0, 0}, {0, 0}}).invariant_factors() == IntVector{0, 0});
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = size(rng), cols = size(rng);
    IntMatrix m(rows, IntVector(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const SmithForm s = smith_normal_form(m);
    CHECK(multiply(multiply(s.left, m), s.right) == s.diagonal);
    CHECK(is_diagonal(s.diagonal));
    CHECK(abs(det_int(s.left)) == 1);
    CHECK(abs(det_int(s.right)) == 1);
    const IntVector d = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
      else CHECK(d[i + 1] == 0);
    }
    if (rows == cols) CHECK(abs(det_int(m)) == abs(det_int(s.diagonal)));
  }
}

TEST_CASE("lattice basis spans the same lattice") {
  const IntMatrix gens = {{2, -1}, {-1, 2}, {1, 0}};
  const IntMatrix b = lattice_basis(gens);
  REQUIRE(b.size() == 2);
  CHECK(abs(det_int(b)) == 1);
  CHECK(lattice_basis({{2, 0}, {0, 2}, {2, 2}}) == IntMatrix{{2, 0}, {0, 2}});
}

TEST_CASE("rank, inverse and solve") {
  const Ring q = Ring::rationals();
  CHECK(rank(to_scalar({{1, 2}, {2, 4}}), q) == 1);
  CHECK(rank(to_scalar({{1, 1}, {1, -1}}), q) == 2);
  CHECK(rank(to_scalar({{1, 1}, {1, -1}}), Ring::prime_field(2)) == 1);
  const auto inv = inverse(to_scalar({{2, 1}, {1, 1}}));
  REQUIRE(inv);
  CHECK((*inv)[0][0] == 1);
  CHECK((*inv)[0][1] == -1);
  CHECK(!inverse(to_scalar({{1, 2}, {2, 4}})));
  const auto x = solve_row(to_scalar({{1, 1}, {-1, 1}}), {Scalar(2), Scalar(0)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == -1);
}

TEST_CASE("characteristic polynomial and squarefree part") {
  // diag(1, 2, 2): (x-1)(x-2)^2 = x^3 - 5x^2 + 8x - 4
  const ScalarMatrix m = to_scalar({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const UniPoly chi = characteristic_polynomial(m);
  CHECK(chi == UniPoly{Scalar(-4), Scalar(8), Scalar(-5), Scalar(1)});
  const UniPoly g = poly_gcd(chi, derivative(chi));
  CHECK(g == UniPoly{Scalar(-2), Scalar(1)});
  const UniPoly sq = poly_divide_exact(chi, g);
  CHECK(sq == UniPoly{Scalar(2), Scalar(-3), Scalar(1)});
  const ScalarMatrix z = evaluate(sq, m);
  for (const auto& row : z)
    for (const auto& v : row) CHECK(v == 0);
  // nilpotent Jordan block: char poly x^2, not annihilated by x
  const ScalarMatrix j = to_scalar({{0, 1}, {0, 0}});
  CHECK(characteristic_polynomial(j) == UniPoly{Scalar(0), Scalar(0), Scalar(1)});
}

#include <doctest.h>

#include "loopdual/chevalley.hpp"

using namespace loopdual;

namespace {

const Ring QQ = Ring::rationals();

LieElement x_of(const ChevalleyBasis& b, const IntVector& coeffs) {
  const int i = b.datum().find_root(coeffs);
  REQUIRE(i >= 0);
  return b.basis_element(b.x_index(static_cast<std::size_t>(i)), QQ);
}

bool nilpotent(const IntMatrix& m) {
  const ScalarMatrix s = to_scalar(m);
  ScalarMatrix p = s;
  for (std::size_t k = 1; k < m.size(); ++k) p = multiply(p, s, QQ);
  for (const auto& row : p)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

std::int64_t max_abs_n(const ChevalleyBasis& b) {
  std::int64_t best = 0;
  const std::size_t n = b.datum().roots().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) best = std::max(best, std::abs(b.structure_constant(a, c)));
  return best;
}

}  // namespace

TEST_CASE("sl2 relations") {
  // G = PGL2, so the dual torus basis is the coroot itself
  const ChevalleyBasis b = build_chevalley(preset("SL2"));
  REQUIRE(b.dim() == 3);
  const LieElement x = x_of(b, {1}), y = x_of(b, {-1}), h = b.basis_element(0, QQ);
  CHECK(bracket(b, x, y) == h);
  LieElement two_x = x;
  two_x.coefficients[b.x_index(0)] = 2;
  CHECK(bracket(b, h, x) == two_x);
  CHECK(bracket(b, x, x).is_zero());

  // G = SL2: the coroot of the dual is twice the lattice generator
  const ChevalleyBasis bd = build_chevalley(dual_datum(preset("SL2")));
  LieElement two_h = bd.basis_element(0, QQ);
  two_h.coefficients[0] = 2;
  CHECK(bracket(bd, x_of(bd, {1}), x_of(bd, {-1})) == two_h);
}

TEST_CASE("structure constants of A2 and G2") {
  const ChevalleyBasis a2 = build_chevalley(preset("SL3"));
  CHECK(std::abs(a2.structure_constant(0, 1)) == 1);
  CHECK(a2.structure_constant(0, 1) == 1);  // extraspecial pair is positive
  CHECK(a2.structure_constant(1, 0) == -1);
  const ChevalleyBasis g2 = build_chevalley(dual_datum(preset("G2")));
  CHECK(max_abs_n(g2) == 3);
}

TEST_CASE("ad(e1) on the lowest root vector of A2") {
  const ChevalleyBasis b = build_chevalley(dual_datum(preset("SL3")));
  const LieElement e1 = sum_simple(b, QQ);
  LieElement v = x_of(b, {-1, -1});
  for (int k = 1; k <= 5; ++k) {
    v = bracket(b, e1, v);
    CAPTURE(k);
    // the orbit climbs through heights -1, 0, 1, 2 and then leaves the algebra
    CHECK(v.is_zero() == (k == 5));
  }
}

TEST_CASE("Jacobi identity and integrality on presets of rank <= 4") {
  for (const auto& name : preset_names()) {
    const RootDatum g = preset(name);
    if (g.rank() > 4) continue;
    CAPTURE(name);
    for (const RootDatum& d : {g, dual_datum(g)}) {
      const ChevalleyBasis b = build_chevalley(d);
      CHECK(jacobi_violations(b).empty());
      CHECK(integrality_violations(b).empty());
    }
  }
}

TEST_CASE("Jacobi identity on E6") {
  const ChevalleyBasis b = build_chevalley(preset("E6"));
  CHECK(jacobi_violations(b).empty());
  CHECK(integrality_violations(b).empty());
}

TEST_CASE("sign error is detected") {
  const ChevalleyBasis b = build_chevalley(preset("SL3"), true);
  CHECK(!jacobi_violations(b).empty());
  const ChevalleyBasis g2 = build_chevalley(preset("G2"), true);
  CHECK(!jacobi_violations(g2).empty());
}

TEST_CASE("ad of torus is diagonal, ad of root vectors nilpotent") {
  const ChevalleyBasis b = build_chevalley(dual_datum(preset("Sp4")));
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const IntMatrix m = b.ad_basis(i);
    if (i < b.torus_dim()) {
      for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c)
          if (r != c) CHECK(m[r][c] == 0);
      for (std::size_t a = 0; a < b.datum().roots().size(); ++a) {
        const std::size_t j = b.x_index(a);
        CHECK(m[j][j] == b.datum().roots()[a].character[i]);
      }
    } else {
      CHECK(nilpotent(m));
    }
  }
}

TEST_CASE("principal nilpotent") {
  const RootDatum g2 = preset("G2");
  const ChevalleyBasis b = build_chevalley(dual_datum(g2));
  const LieElement e = principal_e(b, g2);
  CHECK(e.coefficients[b.x_index(0)] == 1);
  CHECK(e.coefficients[b.x_index(1)] == 3);
  CHECK_THROWS_AS(principal_e(b, preset("SL3")), InvalidInput);

  const RootDatum a2 = preset("SL3");
  const ChevalleyBasis ba = build_chevalley(dual_datum(a2));
  CHECK(principal_e(ba, a2) == change_ring(sum_simple(ba, QQ), Ring::integers()));
  CHECK(ad_kernel_dim(ba, principal_e(ba, a2), QQ) == 2);
  CHECK(ad_kernel_dim(b, e, QQ) == 2);
  CHECK(ad_kernel_dim(ba, ba.zero(QQ), QQ) == 8);

  const RootDatum pgl2 = preset("PGL2");
  const ChevalleyBasis bp = build_chevalley(dual_datum(pgl2));
  CHECK(principal_e(bp, pgl2).coefficients[bp.x_index(0)] == 1);
}

TEST_CASE("e is regular over Q and of degree 2 on every preset") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const RootDatum g = preset(name);
    const ChevalleyBasis b = build_chevalley(dual_datum(g));
    const LieElement e = principal_e(b, g);
    CHECK(ad_kernel_dim(b, e, QQ) == static_cast<std::size_t>(g.dim()));
    for (std::size_t i = 0; i < b.dim(); ++i) {
      if (e.coefficients[i] == 0) continue;
      REQUIRE(i >= b.torus_dim());
      CHECK(two_rho_degree(g, b.datum().roots()[b.root_index(i)].character) == 2);
    }
  }
}

TEST_CASE("bracket refuses mixed rings") {
  const ChevalleyBasis b = build_chevalley(preset("SL2"));
  CHECK_THROWS_AS(bracket(b, b.zero(QQ), b.zero(Ring::prime_field(3))), RingMismatch);
}

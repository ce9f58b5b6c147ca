#include <doctest.h>

#include <map>
#include <random>

#include "loopdual/equivariant.hpp"
#include "loopdual/loop_oracle.hpp"

using namespace loopdual;

namespace {

const Ring QQ = Ring::rationals();

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n, 0);
  v[i] = 1;
  return v;
}

Scalar pair(const ScalarVector& a, const IntVector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<long>(b[i]);
  return s;
}

}  // namespace

TEST_CASE("f form examples") {
  CHECK(f_form(preset("SL2"))[0][0] == -2);
  CHECK(f_form(preset("PGL2"))[0][0] == Scalar(-1) / 2);
  for (const auto& name : preset_names()) {
    const RootDatum d = preset(name);
    const ScalarMatrix f = f_form(d);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) CHECK(f[i][j] == f[j][i]);
    // negative semidefinite with kernel the central directions
    CHECK(rank(f, QQ) == static_cast<std::size_t>(d.rank()));
    std::mt19937 rng(3);
    for (int t = 0; t < 5; ++t) {
      IntVector v(f.size());
      for (auto& x : v) x = static_cast<int>(rng() % 7) - 3;
      Scalar q = 0;
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) q += f[i][j] * static_cast<long>(v[i] * v[j]);
      CHECK(q <= 0);
    }
  }
}

TEST_CASE("n_G reproduces the isogeny list") {
  // type A: #pi_1 / gcd(#Z, #pi_1)
  const std::map<std::string, std::int64_t> expected = {
      {"SL2", 1},   {"PGL2", 2},   {"SL3", 1},     {"PGL3", 3},    {"SL4", 1},     {"PGL4", 4},
      {"SL4/mu2", 1}, {"SL5", 1},  {"PGL5", 5},    {"SL6", 1},     {"PGL6", 6},    {"SL6/mu2", 2},
      {"SL6/mu3", 3}, {"Sp4", 1},  {"PSp4", 1},    {"Sp6", 1},     {"PSp6", 2},    {"Spin5", 1},
      {"SO5", 1},   {"Spin7", 1},  {"SO7", 1},     {"Spin8", 1},   {"SO8", 1},     {"SO8+", 1},
      {"SO8-", 1},  {"PSO8", 2},   {"Spin10", 1},  {"SO10", 1},    {"PSO10", 4},   {"Spin12", 1},
      {"SO12", 1},  {"SO12+", 2},  {"SO12-", 2},   {"PSO12", 2},   {"E6", 1},      {"PE6", 3},
      {"E7", 1},    {"PE7", 2},    {"G2", 1},      {"F4", 1},
  };
  for (const auto& [name, n] : expected) {
    CAPTURE(name);
    CHECK(compute_nG(preset(name)) == n);
  }
}

TEST_CASE("equivariant element") {
  const RootDatum sl2 = preset("SL2");
  const ChevalleyBasis b = build_chevalley(dual_datum(sl2));
  const EquivariantElement eT = build_eT(sl2, b);
  CHECK(eT.f_part == ScalarMatrix{{Scalar(-2)}});
  CHECK(eT.n_G == 1);
  CHECK(specialize_eT(eT, {0}) == change_ring(principal_e(b, sl2), QQ));

  for (const auto& name : preset_names()) {
    const RootDatum d = preset(name);
    if (d.rank() > 4) continue;
    const EquivariantElement e = build_eT(d, build_chevalley(dual_datum(d)));
    for (const auto& row : e.f_part)
      for (const auto& v : row) CHECK(Scalar(v * static_cast<long>(e.n_G)).get_den() == 1);
  }
}

TEST_CASE("specializations of e^T") {
  const RootDatum sl2 = preset("SL2");
  const ChevalleyBasis b = build_chevalley(dual_datum(sl2));
  const EquivariantElement eT = build_eT(sl2, b);
  const SemisimpleReport zero = check_regular_semisimple(b, specialize_eT(eT, {0}));
  CHECK_FALSE(zero.semisimple);
  CHECK_FALSE(zero.regular_semisimple);
  const SemisimpleReport one = check_regular_semisimple(b, specialize_eT(eT, {1}));
  CHECK(one.kernel_dim == 1);
  CHECK(one.regular_semisimple);

  // A2 on the discriminant locus: s orthogonal to a root
  const RootDatum sl3 = preset("SL3");
  const ChevalleyBasis b3 = build_chevalley(dual_datum(sl3));
  const EquivariantElement e3 = build_eT(sl3, b3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-10, 9);
  for (int t = 0; t < 20; ++t) {
    IntVector s(2);
    for (auto& x : s) {
      x = dist(rng);
      if (x >= 0) ++x;
    }
    const SemisimpleReport r = check_regular_semisimple(b3, specialize_eT(e3, s));
    CHECK(r.regular_semisimple == (eT_discriminant(e3, b3, s) != 0));
  }
  // a point with f(gamma, s) = 0 for the highest coroot direction
  IntVector s{1, -1};
  CHECK(eT_discriminant(e3, b3, s) == 0);
  CHECK_FALSE(check_regular_semisimple(b3, specialize_eT(e3, s)).regular_semisimple);
}

TEST_CASE("equivariant centralizer over R_T") {
  for (const std::string name : {"SL2", "SL3"}) {
    const RootDatum d = preset(name);
    const ChevalleyBasis b = build_chevalley(dual_datum(d));
    const CentralizerIdeal ci = centralizer_ideal(build_eT(d, b), b);
    // fibres of dimension r over the r-dimensional base
    CHECK(ideal_dimension(ci.ideal) == 2 * d.rank());
  }
}

TEST_CASE("localization restriction") {
  const RootDatum sl2 = preset("SL2");
  CHECK(localization_restriction(sl2, {0}) == ScalarVector{Scalar(0)});
  // -alpha: the root of SL2 has coordinate 2
  CHECK(localization_restriction(sl2, {1}) == ScalarVector{Scalar(-2)});
  for (const auto& name : preset_names()) {
    const RootDatum d = preset(name);
    const ScalarMatrix f = f_form(d);
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i) {
      const ScalarVector r = localization_restriction(d, unit(n, i));
      for (std::size_t j = 0; j < n; ++j) CHECK(pair(r, unit(n, j)) == f[i][j]);
    }
  }
}

TEST_CASE("loop space series") {
  const LoopSeries sl2 = omega_poincare(preset("SL2"), 10);
  CHECK(sl2.series.coefficients == std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  const LoopSeries pgl2 = omega_poincare(preset("PGL2"), 6);
  CHECK(pgl2.series.coefficients == std::vector<std::int64_t>{2, 0, 2, 0, 2, 0, 2});
  const LoopSeries g2 = omega_poincare(preset("G2"), 40);
  CHECK(g2.series == product_series({2, 10}, 1, 40));
  const LoopSeries gl2 = omega_poincare(preset("GL2"), 4);
  CHECK(gl2.central_free_rank == 1);
  CHECK(gl2.components == 1);
  for (const auto& name : preset_names()) {
    const auto c = omega_poincare(preset(name), 30).series.coefficients;
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] >= 0);
    // even degrees only, non-decreasing there
    for (std::size_t k = 2; k < c.size(); k += 2) CHECK(c[k] >= c[k - 2]);
  }
}

TEST_CASE("line bundle degrees") {
  CHECK(degree_dV(preset("SL2"), adjoint_rep(preset("SL2"))) == 4);
  CHECK(degree_dV(preset("SL3"), adjoint_rep(preset("SL3"))) == 6);
  CHECK(degree_dV(preset("SL2"), WeightedRep{}) == 0);
  CHECK_THROWS_AS(degree_dV(preset("SL2"), WeightedRep{{{{1}, 1}}, false}), InvalidInput);
  CHECK_THROWS_AS(degree_dV(preset("SL2"), WeightedRep{{{{2}, 1}}, true}), InvalidInput);
  for (const auto& name : preset_names()) {
    const RootDatum d = preset(name);
    const std::int64_t kil = killing_form(d, d.theta(), d.theta());
    CHECK(2 * degree_dV(d, adjoint_rep(d)) == kil);
  }
}

TEST_CASE("fixed point weights") {
  const RootDatum sl2 = preset("SL2");
  const WeightedRep ad = adjoint_rep(sl2);
  CHECK(fixed_point_chern_weight(sl2, ad, {0}) == IntVector{0});
  CHECK(fixed_point_chern_weight(sl2, ad, {1}) == IntVector{-8});
  for (const auto& name : preset_names()) {
    const RootDatum d = preset(name);
    const WeightedRep V = adjoint_rep(d);
    const std::size_t n = static_cast<std::size_t>(d.dim());
    const Scalar dV = Scalar(static_cast<long>(degree_dV(d, V)));
    for (std::size_t i = 0; i < n; ++i) {
      const IntVector w = fixed_point_chern_weight(d, V, unit(n, i));
      const ScalarVector loc = localization_restriction(d, unit(n, i));
      for (std::size_t k = 0; k < n; ++k) CHECK(Scalar(static_cast<long>(w[k])) / dV == loc[k]);
      // linearity
      for (std::size_t j = 0; j < n; ++j) {
        IntVector sum = unit(n, i);
        sum[j] += 2;
        const IntVector wj = fixed_point_chern_weight(d, V, unit(n, j));
        const IntVector ws = fixed_point_chern_weight(d, V, sum);
        for (std::size_t k = 0; k < n; ++k) CHECK(ws[k] == w[k] + 2 * wj[k]);
      }
    }
  }
}

TEST_CASE("compare report") {
  const Verdict sl2 = compare_report(present_centralizer(preset("SL2"), QQ), preset("SL2"), 40);
  CHECK(sl2.pass());
  const CentralizerPresentation g2 = present_centralizer(preset("G2"), Ring::prime_field(2));
  const Verdict v = compare_report(g2, preset("G2"), 40, {present_centralizer(preset("G2"), QQ).hilbert});
  CHECK(v.pass());
  CHECK(v.first_difference == -1);
  // a mismatching oracle is located
  const Verdict wrong = compare_report(present_centralizer(preset("SL3"), QQ), preset("Sp4"), 40);
  CHECK_FALSE(wrong.series_equal);
  CHECK(wrong.first_difference == 4);
}

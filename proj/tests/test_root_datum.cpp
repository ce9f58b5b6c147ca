#include <doctest.h>

#include <map>

#include "loopdual/root_datum.hpp"

using namespace loopdual;

namespace {

// Classical tables, keyed by Cartan type.
struct Classical {
  std::size_t roots;
  IntVector exponents;
  int ratio;
};

Classical classical(char type, int n) {
  IntVector ex;
  switch (type) {
    case 'A':
      for (int i = 1; i <= n; ++i) ex.push_back(i);
      return {static_cast<std::size_t>(n * (n + 1)), ex, 1};
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) ex.push_back(2 * i - 1);
      return {static_cast<std::size_t>(2 * n * n), ex, 2};
    case 'D':
      for (int i = 1; i < n; ++i) ex.push_back(2 * i - 1);
      ex.push_back(n - 1);
      std::sort(ex.begin(), ex.end());
      return {static_cast<std::size_t>(2 * n * (n - 1)), ex, 1};
    case 'E':
      if (n == 6) return {72, {1, 4, 5, 7, 8, 11}, 1};
      return {126, {1, 5, 7, 9, 11, 13, 17}, 1};
    case 'F': return {48, {1, 5, 7, 11}, 2};
    default: return {12, {1, 5}, 3};
  }
}

// Cartan type of each named preset, plus the order of X_*/ZPhi.
struct Expected {
  char type;
  int rank;
  std::int64_t pi0;
};

const std::map<std::string, Expected>& expected() {
  static const std::map<std::string, Expected> t = {
      {"SL2", {'A', 1, 1}},     {"PGL2", {'A', 1, 2}},    {"SL3", {'A', 2, 1}},
      {"PGL3", {'A', 2, 3}},    {"SL4", {'A', 3, 1}},     {"PGL4", {'A', 3, 4}},
      {"SL4/mu2", {'A', 3, 2}}, {"SL5", {'A', 4, 1}},     {"PGL5", {'A', 4, 5}},
      {"SL6", {'A', 5, 1}},     {"PGL6", {'A', 5, 6}},    {"SL6/mu2", {'A', 5, 2}},
      {"SL6/mu3", {'A', 5, 3}}, {"Spin5", {'B', 2, 1}},   {"SO5", {'B', 2, 2}},
      {"Sp4", {'C', 2, 1}},     {"PSp4", {'C', 2, 2}},    {"Spin7", {'B', 3, 1}},
      {"SO7", {'B', 3, 2}},     {"Sp6", {'C', 3, 1}},     {"PSp6", {'C', 3, 2}},
      {"G2", {'G', 2, 1}},      {"F4", {'F', 4, 1}},      {"Spin8", {'D', 4, 1}},
      {"SO8", {'D', 4, 2}},     {"SO8+", {'D', 4, 2}},    {"SO8-", {'D', 4, 2}},
      {"PSO8", {'D', 4, 4}},    {"Spin10", {'D', 5, 1}},  {"SO10", {'D', 5, 2}},
      {"PSO10", {'D', 5, 4}},   {"Spin12", {'D', 6, 1}},  {"SO12", {'D', 6, 2}},
      {"SO12+", {'D', 6, 2}},   {"SO12-", {'D', 6, 2}},   {"PSO12", {'D', 6, 4}},
      {"E6", {'E', 6, 1}},      {"PE6", {'E', 6, 3}},     {"E7", {'E', 7, 1}},
      {"PE7", {'E', 7, 2}},     {"GL2", {'A', 1, 1}},
  };
  return t;
}

IntVector reflect_cochar(const RootDatum& d, std::size_t i, const IntVector& x) {
  // s_i(x) = x - <alpha_i, x> alpha_i^vee
  const std::int64_t k = dot(d.simple_roots()[i], x);
  IntVector y = x;
  for (std::size_t j = 0; j < y.size(); ++j) y[j] -= k * d.simple_coroots()[i][j];
  return y;
}

}  // namespace

TEST_CASE("loading examples") {
  const RootDatum sl2 = load_datum(R"({"cartan": [[2]], "lattice": "simply_connected"})");
  CHECK(sl2.rank() == 1);
  CHECK(sl2.roots().size() == 2);
  CHECK(component_group(sl2).torsion_order() == 1);

  const RootDatum g2 = load_datum(R"({"cartan": [[2,-1],[-3,2]], "lattice": "simply_connected"})");
  CHECK(g2.roots().size() == 12);

  const RootDatum pgl2 = load_datum(R"({"cartan": [[2]], "lattice": "adjoint"})");
  // the coroot is twice the lattice generator
  CHECK(pgl2.simple_coroots() == IntMatrix{{2}});
  CHECK(component_group(pgl2).invariant_factors == IntVector{2});
}

TEST_CASE("invalid documents are rejected") {
  CHECK_THROWS_AS(load_datum(R"({"cartan": [[2,-1],[-1,2],[0,0]]})"), InvalidInput);
  CHECK_THROWS_AS(load_datum(R"({"cartan": [[2,-2],[-2,2]]})"), InvalidInput);  // affine
  CHECK_THROWS_AS(load_datum(R"({"cartan": [[2,0],[0,2]]})"), InvalidInput);    // disconnected
  CHECK_THROWS_AS(load_datum(R"({"cartan": [[2,-1],[0,2]]})"), InvalidInput);
  CHECK_THROWS_AS(load_datum(R"({"cartan": []})"), InvalidInput);
  CHECK_THROWS_AS(load_datum(R"({"cartan": [[2]], "lattice": {"basis": [[4]]}})"), InvalidInput);
  CHECK_THROWS_AS(load_datum(R"({"cartan": [[2]], "lattice": "weird"})"), InvalidInput);
  CHECK_THROWS_AS(load_datum("not json"), InvalidInput);
  CHECK_THROWS_AS(preset("Q7"), InvalidInput);
}

TEST_CASE("json round trip") {
  for (const auto& name : preset_names()) {
    const RootDatum d = preset(name);
    CHECK(load_datum(datum_to_json(d)) == d);
  }
}

TEST_CASE("presets match classical tables") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const RootDatum d = preset(name);
    const Expected e = expected().at(name);
    const Classical c = classical(e.type, e.rank);
    CHECK(d.rank() == e.rank);
    CHECK(d.roots().size() == c.roots);
    CHECK(exponents(d) == c.exponents);
    CHECK(length_ratio(d) == c.ratio);
    std::int64_t sum = 0;
    for (auto m : exponents(d)) sum += m;
    CHECK(sum == static_cast<std::int64_t>(d.num_positive()));
    const FiniteAbelianGroup pi0 = component_group(d);
    CHECK(pi0.torsion_order() == e.pi0);
    CHECK(pi0.free_rank() == d.central_rank());
  }
}

TEST_CASE("component group structure") {
  CHECK(component_group(preset("PSO8")).invariant_factors == IntVector{2, 2});
  CHECK(component_group(preset("PSO10")).invariant_factors == IntVector{4});
  CHECK(component_group(preset("GL2")).invariant_factors == IntVector{0});
  CHECK(component_group(preset("SL2")).invariant_factors.empty());
  CHECK(component_group(preset("PGL6")).to_string() == "Z/6");
}

TEST_CASE("Killing form values") {
  const RootDatum a1 = preset("SL2");
  CHECK(killing_form(a1, {1}, {1}) == 8);
  const RootDatum a2 = preset("SL3");
  CHECK(killing_form(a2, a2.simple_coroots()[0], a2.simple_coroots()[0]) == 12);
  CHECK(killing_form(a2, {0, 0}, {3, -1}) == 0);
  CHECK_THROWS_AS(killing_form(a2, {1}, {1, 0}), InvalidInput);
}

TEST_CASE("simply-laced Killing form is 2h times the Cartan matrix") {
  // independent oracle: (a_i, a_j)_Kil = 2 h a_ij with h the Coxeter number
  const std::map<std::string, std::int64_t> coxeter = {
      {"SL2", 2}, {"SL3", 3}, {"PGL4", 4}, {"SL6/mu3", 6}, {"Spin8", 6},
      {"PSO10", 8}, {"SO12+", 10}, {"E6", 12}, {"PE7", 18}};
  for (const auto& [name, h] : coxeter) {
    CAPTURE(name);
    const RootDatum d = preset(name);
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j)
        CHECK(killing_form(d, d.simple_coroots()[i], d.simple_coroots()[j]) ==
              2 * h * d.cartan()[i][j]);
  }
}

TEST_CASE("Killing form is symmetric, W-invariant, and degenerate only on the centre") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const RootDatum d = preset(name);
    const auto& basis = identity_int(static_cast<std::size_t>(d.dim()));
    for (const auto& x : basis)
      for (const auto& y : basis) {
        CHECK(killing_form(d, x, y) == killing_form(d, y, x));
        for (int i = 0; i < d.rank(); ++i)
          CHECK(killing_form(d, reflect_cochar(d, i, x), reflect_cochar(d, i, y)) ==
                killing_form(d, x, y));
      }
    ScalarMatrix gram(d.dim(), ScalarVector(d.dim()));
    for (int i = 0; i < d.dim(); ++i)
      for (int j = 0; j < d.dim(); ++j)
        gram[i][j] = static_cast<long>(killing_form(d, basis[i], basis[j]));
    CHECK(rank(gram, Ring::rationals()) == static_cast<std::size_t>(d.rank()));
  }
  const RootDatum gl2 = preset("GL2");
  // the central cocharacter e_1 + e_2 pairs to zero with everything
  CHECK(killing_form(gl2, {1, 1}, {1, 0}) == 0);
  CHECK(killing_form(gl2, {1, 1}, {1, 1}) == 0);
  CHECK(killing_form(gl2, {1, 0}, {1, 0}) > 0);
}

TEST_CASE("length ratio") {
  CHECK(length_ratio(preset("SL3")) == 1);
  CHECK(length_ratio(preset("Spin5")) == 2);
  CHECK(length_ratio(preset("G2")) == 3);
  CHECK(coroot_lengths(preset("G2")) == IntVector{1, 3});
  CHECK(coroot_lengths(preset("Spin5")) == IntVector{1, 2});
  CHECK(coroot_lengths(preset("Sp4")) == IntVector{2, 1});
  CHECK(coroot_lengths(preset("F4")) == IntVector{1, 1, 2, 2});
}

TEST_CASE("two_rho degree") {
  const RootDatum a1 = preset("SL2");
  CHECK(two_rho_degree(a1, {1}) == 2);
  const RootDatum a2 = preset("SL3");
  CHECK(two_rho_degree(a2, {1, 1}) == 4);
  CHECK_THROWS_AS(two_rho_degree(a2, {2, 0}), InvalidInput);
  const RootDatum g2 = preset("G2");
  CHECK(two_rho_degree(g2, g2.roots()[g2.num_positive() - 1].cocharacter) == 2 * 3);
  // highest root of the dual system has height 5
  const RootDatum dual = dual_datum(g2);
  CHECK(dual.highest_root().height == 5);
  CHECK(two_rho_degree(g2, dual.highest_root().character) == 10);
  for (const auto& name : preset_names()) {
    const RootDatum d = preset(name);
    const RootDatum dd = dual_datum(d);
    for (std::size_t i = 0; i < dd.num_positive(); ++i) {
      const std::int64_t deg = two_rho_degree(d, dd.roots()[i].character);
      CHECK(deg == 2 * dd.roots()[i].height);
    }
  }
}

TEST_CASE("root order puts simple roots first in index order") {
  const RootDatum d = preset("E6");
  for (int i = 0; i < d.rank(); ++i) {
    IntVector e(d.rank(), 0);
    e[i] = 1;
    CHECK(d.find_root(e) == i);
  }
  for (std::size_t i = 0; i + 1 < d.num_positive(); ++i)
    CHECK(d.roots()[i].height <= d.roots()[i + 1].height);
  for (std::size_t i = 0; i < d.num_positive(); ++i) {
    const int n = d.negative_of(static_cast<int>(i));
    for (int k = 0; k < d.rank(); ++k)
      CHECK(d.roots()[n].coefficients[k] == -d.roots()[i].coefficients[k]);
  }
}

TEST_CASE("roots pair with their coroots to 2") {
  for (const auto& name : preset_names()) {
    const RootDatum d = preset(name);
    for (const auto& r : d.roots()) CHECK(dot(r.character, r.cocharacter) == 2);
  }
}

TEST_CASE("dual datum") {
  const RootDatum sl2 = preset("SL2");
  const RootDatum dual = dual_datum(sl2);
  CHECK(dual == preset("PGL2"));
  const RootDatum b2 = preset("Spin5");
  CHECK(dual_datum(b2).cartan() == cartan_of_type('C', 2));
  CHECK(component_group(dual_datum(b2)).torsion_order() == 2);
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const RootDatum d = preset(name);
    const RootDatum dd = dual_datum(dual_datum(d));
    CHECK(dd == d);
    CHECK(dd.name() == d.name());
    CHECK(dd.cochar_basis() == d.cochar_basis());
    CHECK(component_group(d).torsion_order() == center_group(dual_datum(d)).torsion_order());
    CHECK(exponents(d) == exponents(dual_datum(d)));
  }
}

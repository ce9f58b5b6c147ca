#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loopdual/chevalley.hpp"
#include "loopdual/hilbert.hpp"

namespace loopdual {

using PolyVector = std::vector<Polynomial>;
using PolyMatrix = std::vector<PolyVector>;

/// Coordinates on the Borel subgroup of the dual group.
///
/// b = t * prod_a exp(u_a x_a), the product taken over positive roots in
/// `order` (default: the canonical root order). Torus coordinates z_k with
/// inverses w_k (z_k w_k = 1) are present only when `with_torus` is set;
/// a root a acts on x_a through prod_k z_k^{a_k}. Unipotent variables are
/// named u<root index + 1><suffix> and weighted by 2 * height, except in
/// rings with torus variables where every weight is 1.
struct BorelCoordinates {
  PolyRingPtr ring;
  std::size_t torus_dim = 0;
  bool with_torus = false;
  std::vector<std::size_t> order;
  /// Extra leading variables (e.g. torus parameters of an equivariant element).
  std::size_t extra = 0;

  std::size_t z(std::size_t k) const { return extra + k; }
  std::size_t w(std::size_t k) const { return extra + torus_dim + k; }
  /// Variable index of u_a for the positive root with the given index.
  std::size_t u(std::size_t root) const;
  std::size_t u_offset() const { return extra + (with_torus ? 2 * torus_dim : 0); }
};

BorelCoordinates borel_coordinates(const ChevalleyBasis& basis, const Ring& ring, bool with_torus,
                                   std::vector<std::size_t> order = {}, const std::string& suffix = "",
                                   std::vector<std::string> extra_names = {},
                                   std::vector<int> extra_weights = {});

/// ad(x_a)^k / k! for k = 0, 1, ... until zero; throws Error on a non-integral entry.
std::vector<IntMatrix> exp_ad_terms(const ChevalleyBasis& basis, std::size_t root);

/// Ad(b) as a matrix of polynomials (column j = Ad(b) applied to basis vector j).
PolyMatrix borel_adjoint(const BorelCoordinates& coords, const ChevalleyBasis& basis);
/// prod_a Ad(exp(u_a x_a)) applied to v.
PolyVector unipotent_action(const BorelCoordinates& coords, const ChevalleyBasis& basis, PolyVector v);
/// Ad(exp(c x_a)) applied to v for a polynomial c.
PolyVector exp_action(const ChevalleyBasis& basis, std::size_t root, const Polynomial& c, const PolyVector& v);
PolyVector lift(const LieElement& v, const PolyRingPtr& ring);

/// e + f with f a bilinear form on X_*(T); R_T has variables a_1..a_n of degree 2.
struct EquivariantElement {
  LieElement e_part;
  ScalarMatrix f_part;
  std::int64_t n_G = 1;

  /// Coefficient of h_k as a linear form in the a_j: row k of f_part.
  std::size_t torus_dim() const { return f_part.size(); }
};

struct CentralizerIdeal {
  Ideal ideal;
  BorelCoordinates coords;
  /// False when some simple coefficient is not a unit (the Laurent ideal is returned).
  bool torus_eliminated = false;
  /// Character group of the torus part when eliminated.
  FiniteAbelianGroup zcenter;
  std::string diagnostic;
};

/// Ideal of the centralizer of v in the Borel; see BorelCoordinates.
CentralizerIdeal centralizer_ideal(const LieElement& v, const ChevalleyBasis& basis, const Ring& ring,
                                   std::vector<std::size_t> order = {});
/// Ideal of the centralizer of e^T over R_T (Laurent in the torus, weights 1).
CentralizerIdeal centralizer_ideal(const EquivariantElement& eT, const ChevalleyBasis& basis,
                                   std::vector<std::size_t> order = {});

struct Generator {
  std::string name;
  int degree = 0;
};

struct PresentOptions {
  GroebnerOptions groebner;
  int truncation = 40;
  std::vector<std::size_t> order;
};

/// Graded presentation of the coordinate ring of the centralizer of e.
struct CentralizerPresentation {
  std::string datum_name;
  Ring base = Ring::rationals();
  int ell = 1;
  FiniteAbelianGroup zcenter;
  std::vector<Generator> generators;
  /// Relations among the generators, over `ring`.
  std::vector<Polynomial> relations;
  PolyRingPtr ring;
  HilbertSeries hilbert;
  int dimension = 0;

  /// The ideal in all unipotent coordinates and its elimination basis
  /// (non-generator variables first), used for coproducts.
  CentralizerIdeal source;
  std::shared_ptr<const ChevalleyBasis> basis;
  std::vector<std::size_t> generator_vars;
  PolyRingPtr elimination_ring;
  std::shared_ptr<const GroebnerBasis> elimination_basis;

  /// Series of the presentation ring modulo the relations, times |Z|.
  HilbertSeries presentation_series(int truncation) const;
};

/// Raises BadPrime when the characteristic divides ell_G.
CentralizerPresentation present_centralizer(const RootDatum& d, const Ring& ring,
                                            const PresentOptions& options = {});

/// Dimension of the centralizer scheme of e in the Borel over the ring (Laurent
/// ideal when the torus cannot be eliminated).
int centralizer_dimension(const RootDatum& d, const Ring& ring, const GroebnerOptions& options = {});

struct GroupCheckReport {
  std::size_t points = 0;
  bool identity = false;
  bool closed = false;
  bool inverses = false;
  bool commutative = false;
  bool ok() const { return identity && closed && inverses && commutative; }
};

/// Enumerates the F_p-points of the centralizer of e in the Borel and checks the
/// group law through the adjoint representation.
GroupCheckReport brute_force_group_check(const RootDatum& d, std::uint32_t p);

/// Coproduct on generators: polynomials in two copies (suffixes _1, _2) of the generators.
struct CoproductTable {
  PolyRingPtr ring;  // generators_1 then generators_2
  std::vector<Polynomial> delta;
  bool counit_ok = false;
  bool coassociative = false;
};

CoproductTable coproduct_on_generators(const CentralizerPresentation& pres);

/// Multiplication table of the graded dual in degrees <= N.
struct DistributionAlgebra {
  std::vector<Monomial> basis;  // standard monomials of the presentation ring
  std::vector<std::string> labels;
  /// products[i][j] = coefficients over `basis` (only entries of degree <= N).
  std::vector<std::vector<ScalarVector>> products;
  Ring base = Ring::rationals();
  int truncation = 0;

  std::optional<std::size_t> index_of(const Exponents& e) const;
};

DistributionAlgebra truncated_dist(const CentralizerPresentation& pres, const CoproductTable& delta, int N);

}  // namespace loopdual

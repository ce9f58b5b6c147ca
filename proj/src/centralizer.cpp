#include "loopdual/centralizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace loopdual {

namespace {

Polynomial zero_poly(const PolyRingPtr& r) { return Polynomial(r); }

PolyVector apply_int(const IntMatrix& m, const PolyVector& v) {
  const PolyRingPtr& r = v.front().ring();
  PolyVector out(m.size(), zero_poly(r));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && !v[j].is_zero()) out[i] = out[i] + v[j].scaled(Scalar(static_cast<long>(m[i][j])));
  return out;
}

Polynomial torus_monomial(const BorelCoordinates& c, const IntVector& character) {
  Exponents e(c.ring->size(), 0);
  for (std::size_t k = 0; k < character.size(); ++k) {
    if (character[k] > 0) e[c.z(k)] = static_cast<int>(character[k]);
    if (character[k] < 0) e[c.w(k)] = static_cast<int>(-character[k]);
  }
  return Polynomial::monomial(c.ring, make_monomial(*c.ring, std::move(e)), Scalar(1));
}

// Multiplies the root-space components by their torus characters.
PolyVector torus_scale(const BorelCoordinates& c, const ChevalleyBasis& basis, PolyVector v) {
  const auto& roots = basis.datum().roots();
  for (std::size_t a = 0; a < roots.size(); ++a) {
    auto& x = v[basis.x_index(a)];
    if (!x.is_zero()) x = x * torus_monomial(c, roots[a].character);
  }
  return v;
}

std::vector<Polynomial> torus_relations(const BorelCoordinates& c) {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < c.torus_dim; ++k)
    out.push_back(Polynomial::variable(c.ring, c.z(k)) * Polynomial::variable(c.ring, c.w(k)) -
                  Polynomial::constant(c.ring, Scalar(1)));
  return out;
}

bool simple_units(const LieElement& v, const ChevalleyBasis& basis, const Ring& ring, std::string& why) {
  const std::size_t r = static_cast<std::size_t>(basis.datum().rank());
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Scalar c = ring.image(v.coefficients[i]);
    const bool simple = i >= basis.torus_dim() && basis.root_index(i) < r;
    if (!simple && c != 0) {
      why = "element has components outside the simple root spaces";
      return false;
    }
    if (simple && !ring.is_unit(c)) {
      why = "simple coefficient " + to_string(v.coefficients[i]) + " of " + basis.label(i) +
            " is not a unit in " + ring.name();
      return false;
    }
  }
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, std::int64_t p) {
  const std::size_t n = a.size();
  IntMatrix out(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
  return out;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Renames variables: images[i] is the variable of `target` receiving variable i.
Polynomial rename(const Polynomial& p, const PolyRingPtr& target, const std::vector<std::size_t>& where) {
  std::vector<Polynomial> images;
  for (auto w : where) images.push_back(Polynomial::variable(target, w));
  return p.substitute(images);
}

// Substitutes variables by name; variables absent from `target` must not occur.
Polynomial restrict_to(const Polynomial& p, const PolyRingPtr& target) {
  const PolyRing& src = *p.ring();
  const Exponents used = p.support_degrees();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const int j = target->index_of(src.names[i]);
    if (j < 0) {
      if (used[i] != 0) throw Error("coordinate extraction failed: " + src.names[i] + " survives reduction");
      images.push_back(Polynomial(target));
    } else {
      images.push_back(Polynomial::variable(target, static_cast<std::size_t>(j)));
    }
  }
  return p.substitute(images);
}

HilbertSeries scale_series(HilbertSeries hs, std::int64_t s) {
  for (auto& c : hs.coefficients) c *= s;
  for (auto& c : hs.numerator) c *= s;
  return hs;
}

}  // namespace

std::size_t BorelCoordinates::u(std::size_t root) const { return u_offset() + root; }

BorelCoordinates borel_coordinates(const ChevalleyBasis& basis, const Ring& ring, bool with_torus,
                                   std::vector<std::size_t> order, const std::string& suffix,
                                   std::vector<std::string> extra_names, std::vector<int> extra_weights) {
  const RootDatum& d = basis.datum();
  const std::size_t npos = d.num_positive();
  if (order.empty()) {
    order.resize(npos);
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted.size() != npos || sorted[i] != i)
      throw InvalidInput("product order must list every positive root once");
  if (extra_weights.empty()) extra_weights.assign(extra_names.size(), 2);

  BorelCoordinates c;
  c.torus_dim = basis.torus_dim();
  c.with_torus = with_torus;
  c.order = std::move(order);
  c.extra = extra_names.size();
  std::vector<std::string> names = std::move(extra_names);
  std::vector<int> weights = std::move(extra_weights);
  if (with_torus) {
    for (std::size_t k = 0; k < c.torus_dim; ++k) names.push_back("z" + std::to_string(k + 1) + suffix);
    for (std::size_t k = 0; k < c.torus_dim; ++k) names.push_back("w" + std::to_string(k + 1) + suffix);
    weights.assign(names.size(), 1);
  }
  for (std::size_t a = 0; a < npos; ++a) {
    names.push_back("u" + std::to_string(a + 1) + suffix);
    weights.push_back(with_torus ? 1 : 2 * d.roots()[a].height);
  }
  c.ring = make_ring(ring, std::move(names), std::move(weights));
  return c;
}

std::vector<IntMatrix> exp_ad_terms(const ChevalleyBasis& basis, std::size_t root) {
  const IntMatrix ad = basis.ad_basis(basis.x_index(root));
  std::vector<IntMatrix> out{identity_int(basis.dim())};
  for (std::int64_t k = 1;; ++k) {
    IntMatrix next = multiply(out.back(), ad);
    bool zero = true;
    for (auto& row : next)
      for (auto& x : row) {
        if (x % k != 0)
          throw Error("ad(" + basis.label(basis.x_index(root)) + ")^" + std::to_string(k) + "/" +
                      std::to_string(k) + "! is not integral: structure constants are inconsistent");
        x /= k;
        zero = zero && x == 0;
      }
    if (zero) break;
    out.push_back(std::move(next));
    if (k > static_cast<std::int64_t>(basis.dim())) throw Error("ad(x) is not nilpotent");
  }
  return out;
}

PolyVector lift(const LieElement& v, const PolyRingPtr& ring) {
  PolyVector out;
  for (const auto& c : v.coefficients) out.push_back(Polynomial::constant(ring, ring->coefficients.image(c)));
  return out;
}

PolyVector exp_action(const ChevalleyBasis& basis, std::size_t root, const Polynomial& c, const PolyVector& v) {
  const auto terms = exp_ad_terms(basis, root);
  PolyVector out = v;
  Polynomial power = c;
  for (std::size_t k = 1; k < terms.size(); ++k) {
    const PolyVector w = apply_int(terms[k], v);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!w[i].is_zero()) out[i] = out[i] + w[i] * power;
    if (k + 1 < terms.size()) power = power * c;
  }
  return out;
}

PolyVector unipotent_action(const BorelCoordinates& coords, const ChevalleyBasis& basis, PolyVector v) {
  for (auto it = coords.order.rbegin(); it != coords.order.rend(); ++it)
    v = exp_action(basis, *it, Polynomial::variable(coords.ring, coords.u(*it)), v);
  return v;
}

PolyMatrix borel_adjoint(const BorelCoordinates& coords, const ChevalleyBasis& basis) {
  const std::size_t n = basis.dim();
  PolyMatrix m(n, PolyVector(n, zero_poly(coords.ring)));
  for (std::size_t j = 0; j < n; ++j) {
    PolyVector col(n, zero_poly(coords.ring));
    col[j] = Polynomial::constant(coords.ring, Scalar(1));
    col = unipotent_action(coords, basis, std::move(col));
    if (coords.with_torus) col = torus_scale(coords, basis, std::move(col));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = std::move(col[i]);
  }
  return m;
}

CentralizerIdeal centralizer_ideal(const LieElement& v, const ChevalleyBasis& basis, const Ring& ring,
                                   std::vector<std::size_t> order) {
  if (v.coefficients.size() != basis.dim()) throw InvalidInput("element does not match the basis");
  CentralizerIdeal out;
  out.torus_eliminated = simple_units(v, basis, ring, out.diagnostic);
  out.coords = borel_coordinates(basis, ring, !out.torus_eliminated, std::move(order));
  const PolyVector e = lift(v, out.coords.ring);
  PolyVector moved = unipotent_action(out.coords, basis, e);
  std::vector<Polynomial> gens;
  if (out.torus_eliminated) {
    out.zcenter = center_group(basis.datum());
  } else {
    moved = torus_scale(out.coords, basis, std::move(moved));
    gens = torus_relations(out.coords);
  }
  for (std::size_t i = 0; i < moved.size(); ++i) gens.push_back(moved[i] - e[i]);
  out.ideal = Ideal(out.coords.ring, std::move(gens));
  return out;
}

CentralizerIdeal centralizer_ideal(const EquivariantElement& eT, const ChevalleyBasis& basis,
                                   std::vector<std::size_t> order) {
  const std::size_t n = basis.torus_dim();
  if (eT.torus_dim() != n) throw InvalidInput("equivariant element does not match the basis");
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("a" + std::to_string(j + 1));
  CentralizerIdeal out;
  out.coords = borel_coordinates(basis, Ring::rationals(), true, std::move(order), "", names);
  out.diagnostic = "equivariant element: the torus part is not eliminated";
  const PolyRingPtr& r = out.coords.ring;
  PolyVector e = lift(eT.e_part, r);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (eT.f_part[k][j] != 0) e[k] = e[k] + Polynomial::variable(r, j).scaled(eT.f_part[k][j]);
  PolyVector moved = torus_scale(out.coords, basis, unipotent_action(out.coords, basis, e));
  std::vector<Polynomial> gens = torus_relations(out.coords);
  for (std::size_t i = 0; i < moved.size(); ++i) gens.push_back(moved[i] - e[i]);
  out.ideal = Ideal(r, std::move(gens));
  return out;
}

HilbertSeries CentralizerPresentation::presentation_series(int truncation) const {
  return scale_series(hilbert_series(Ideal(ring, relations), truncation), zcenter.torsion_order());
}

CentralizerPresentation present_centralizer(const RootDatum& d, const Ring& ring, const PresentOptions& options) {
  if (!ring.is_field()) throw RingMismatch("presentations are computed over Q or F_p");
  CentralizerPresentation pres;
  pres.datum_name = d.name();
  pres.base = ring;
  pres.ell = length_ratio(d);
  if (ring.characteristic() != 0 && pres.ell % static_cast<int>(ring.characteristic()) == 0)
    throw BadPrime("p = " + std::to_string(ring.characteristic()) + " divides l_G = " + std::to_string(pres.ell) +
                   " for " + d.name() + ": e is not regular there");

  const ChevalleyBasis basis = build_chevalley(dual_datum(d));
  const LieElement e = principal_e(basis, d);
  pres.basis = std::make_shared<const ChevalleyBasis>(basis);
  pres.source = centralizer_ideal(e, basis, ring, options.order);
  if (!pres.source.torus_eliminated) throw Error("torus elimination refused: " + pres.source.diagnostic);
  pres.zcenter = pres.source.zcenter;
  const PolyRingPtr& R = pres.source.coords.ring;
  const GroebnerBasis gb = groebner(pres.source.ideal, options.groebner);
  pres.dimension = ideal_dimension(gb) + pres.zcenter.free_rank();
  pres.hilbert = scale_series(hilbert_series(gb, options.truncation), pres.zcenter.torsion_order());

  // minimal generators: variables standard modulo I + m^2
  std::vector<Polynomial> with_square = pres.source.ideal.generators;
  for (std::size_t i = 0; i < R->size(); ++i)
    for (std::size_t j = i; j < R->size(); ++j)
      with_square.push_back(Polynomial::variable(R, i) * Polynomial::variable(R, j));
  const GroebnerBasis lin = groebner(Ideal(R, with_square), options.groebner);
  std::vector<std::size_t> gens, others;
  for (std::size_t i = 0; i < R->size(); ++i) {
    bool leading = false;
    for (const auto& m : lin.leading_monomials())
      if (m.degree == R->weights[i] && m.exp[i] == 1) leading = true;
    (leading ? others : gens).push_back(i);
  }
  pres.generator_vars = gens;

  // relations by eliminating the other variables
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::size_t> where(R->size());
  for (auto i : others) {
    where[i] = names.size();
    names.push_back(R->names[i]);
    weights.push_back(R->weights[i]);
  }
  for (auto i : gens) {
    where[i] = names.size();
    names.push_back(R->names[i]);
    weights.push_back(R->weights[i]);
  }
  pres.elimination_ring = make_ring(ring, names, weights, others.size());
  std::vector<Polynomial> moved;
  for (const auto& g : pres.source.ideal.generators) moved.push_back(rename(g, pres.elimination_ring, where));
  pres.elimination_basis =
      std::make_shared<const GroebnerBasis>(groebner(Ideal(pres.elimination_ring, moved), options.groebner));

  std::vector<std::string> gen_names(names.begin() + static_cast<std::ptrdiff_t>(others.size()), names.end());
  std::vector<int> gen_weights(weights.begin() + static_cast<std::ptrdiff_t>(others.size()), weights.end());
  pres.ring = make_ring(ring, gen_names, gen_weights);
  for (std::size_t k = 0; k < gen_names.size(); ++k) pres.generators.push_back({gen_names[k], gen_weights[k]});
  for (const auto& g : pres.elimination_basis->elements()) {
    bool pure = true;
    for (std::size_t k = 0; k < others.size(); ++k)
      for (const auto& t : g.terms())
        if (t.mono.exp[k] != 0) pure = false;
    if (pure) pres.relations.push_back(restrict_to(g, pres.ring));
  }
  if (pres.presentation_series(options.truncation) != pres.hilbert)
    throw Error("presentation of " + d.name() + " does not reproduce the Hilbert series of the ideal");
  return pres;
}

int centralizer_dimension(const RootDatum& d, const Ring& ring, const GroebnerOptions& options) {
  const ChevalleyBasis basis = build_chevalley(dual_datum(d));
  const CentralizerIdeal ci = centralizer_ideal(principal_e(basis, d), basis, ring);
  const int dim = ideal_dimension(groebner(ci.ideal, options));
  return ci.torus_eliminated ? dim + ci.zcenter.free_rank() : dim;
}

GroupCheckReport brute_force_group_check(const RootDatum& d, std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (length_ratio(d) % static_cast<int>(p) == 0)
    throw BadPrime("p = " + std::to_string(p) + " divides l_G for " + d.name());
  const std::int64_t P = p;
  const ChevalleyBasis basis = build_chevalley(dual_datum(d));
  const std::size_t n = basis.dim();
  const std::size_t t = basis.torus_dim();
  const std::size_t npos = basis.datum().num_positive();
  const LieElement e = principal_e(basis, d);
  IntVector ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = mod(e.coefficients[i].get_num().get_si(), P);
  std::vector<std::vector<IntMatrix>> terms;
  for (std::size_t a = 0; a < npos; ++a) terms.push_back(exp_ad_terms(basis, a));

  std::set<IntMatrix> image;
  GroupCheckReport report;
  std::vector<std::int64_t> z(t, 1), u(npos, 0);
  const IntMatrix id = identity_int(n);
  const std::size_t torus_points = static_cast<std::size_t>(std::pow(P - 1, t));
  const std::size_t unip_points = static_cast<std::size_t>(std::pow(P, npos));
  for (std::size_t tz = 0; tz < torus_points; ++tz) {
    std::size_t code = tz;
    for (std::size_t k = 0; k < t; ++k, code /= static_cast<std::size_t>(P - 1))
      z[k] = 1 + static_cast<std::int64_t>(code % static_cast<std::size_t>(P - 1));
    for (std::size_t tu = 0; tu < unip_points; ++tu) {
      std::size_t c2 = tu;
      for (std::size_t a = 0; a < npos; ++a, c2 /= p) u[a] = static_cast<std::int64_t>(c2 % p);
      IntMatrix m = id;
      for (std::size_t a = 0; a < npos; ++a) {
        IntMatrix f(n, IntVector(n, 0));
        std::int64_t pw = 1;
        for (const auto& term : terms[a]) {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f[i][j] = mod(f[i][j] + pw * mod(term[i][j], P), P);
          pw = pw * u[a] % P;
        }
        m = mul_mod(m, f, P);
      }
      const auto& roots = basis.datum().roots();
      for (std::size_t r = 0; r < roots.size(); ++r) {
        std::int64_t s = 1;
        for (std::size_t k = 0; k < t; ++k) s = s * pow_mod(z[k], mod(roots[r].character[k], P - 1), P) % P;
        for (std::size_t j = 0; j < n; ++j) m[basis.x_index(r)][j] = m[basis.x_index(r)][j] * s % P;
      }
      IntVector img(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) img[i] = (img[i] + m[i][j] * ev[j]) % P;
      if (img != ev) continue;
      ++report.points;
      image.insert(m);
    }
  }
  report.identity = image.count(id) > 0;
  report.closed = report.inverses = report.commutative = true;
  for (const auto& a : image) {
    bool has_inverse = false;
    for (const auto& b : image) {
      const IntMatrix ab = mul_mod(a, b, P);
      if (!image.count(ab)) report.closed = false;
      if (ab != mul_mod(b, a, P)) report.commutative = false;
      if (ab == id) has_inverse = true;
    }
    if (!has_inverse) report.inverses = false;
  }
  return report;
}

namespace {

// Ring with copies of the generator variables, names suffixed _1.._copies.
PolyRingPtr copies_ring(const CentralizerPresentation& pres, int copies) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int c = 1; c <= copies; ++c)
    for (const auto& g : pres.generators) {
      names.push_back(g.name + "_" + std::to_string(c));
      weights.push_back(g.degree);
    }
  return make_ring(pres.base, names, weights);
}

// Relations copied into every factor, as a Groebner basis.
GroebnerBasis copies_relations(const CentralizerPresentation& pres, const PolyRingPtr& ring, int copies) {
  std::vector<Polynomial> rel;
  const std::size_t g = pres.generators.size();
  for (int c = 0; c < copies; ++c) {
    std::vector<std::size_t> where(g);
    for (std::size_t k = 0; k < g; ++k) where[k] = static_cast<std::size_t>(c) * g + k;
    for (const auto& r : pres.relations) rel.push_back(rename(r, ring, where));
  }
  return groebner(Ideal(ring, rel));
}

}  // namespace


CoproductTable coproduct_on_generators(const CentralizerPresentation& pres) {
  if (!pres.basis || pres.basis->datum().rank() > 2)
    throw InvalidInput("coproducts are computed for rank <= 2 only");
  const ChevalleyBasis& basis = *pres.basis;
  const Ring& k = pres.base;
  const auto& order = pres.source.coords.order;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != i) throw InvalidInput("coproducts need the canonical product order");
  const PolyRingPtr& R = pres.source.coords.ring;
  const std::size_t N = R->size();

  // one ring holding both factors
  std::vector<std::string> names1;
  std::vector<int> weights1;
  for (std::size_t a = 0; a < N; ++a) {
    names1.push_back(R->names[a] + "_1");
    weights1.push_back(R->weights[a]);
  }
  const BorelCoordinates c2 = borel_coordinates(basis, k, false, order, "_2", names1, weights1);
  BorelCoordinates c1 = c2;
  c1.extra = 0;
  const PolyRingPtr& J = c2.ring;
  const auto& roots = basis.datum().roots();

  // coordinates of b1 * b2, peeled off factor by factor from the images of the h_k
  std::vector<PolyVector> v;
  for (std::size_t t = 0; t < basis.torus_dim(); ++t) {
    PolyVector h(basis.dim(), Polynomial(J));
    h[t] = Polynomial::constant(J, Scalar(1));
    v.push_back(unipotent_action(c1, basis, unipotent_action(c2, basis, std::move(h))));
  }
  std::vector<Polynomial> U(N, Polynomial(J));
  for (std::size_t a : order) {
    std::size_t t = 0;
    while (t < v.size() && !k.is_unit(Scalar(static_cast<long>(roots[a].character[t])))) ++t;
    if (t == v.size())
      throw Error("coordinate extraction failed: no torus direction detects " + basis.label(basis.x_index(a)));
    const Scalar pairing = Scalar(static_cast<long>(roots[a].character[t]));
    U[a] = v[t][basis.x_index(a)].scaled(k.neg(k.inverse(k.image(pairing))));
    for (auto& vec : v) vec = exp_action(basis, a, -U[a], vec);
  }
  for (std::size_t t = 0; t < v.size(); ++t)
    for (std::size_t i = 0; i < basis.dim(); ++i)
      if (v[t][i] != (i == t ? Polynomial::constant(J, Scalar(1)) : Polynomial(J)))
        throw Error("coordinate extraction failed: the product is not in the ordered form");

  // reduce modulo the centralizer ideal in both factors, eliminating non-generators
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < N; ++i)
    if (std::find(pres.generator_vars.begin(), pres.generator_vars.end(), i) == pres.generator_vars.end())
      others.push_back(i);
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const std::string suffix : {"_1", "_2"})
    for (auto i : others) {
      names.push_back(R->names[i] + suffix);
      weights.push_back(R->weights[i]);
    }
  for (const std::string suffix : {"_1", "_2"})
    for (auto i : pres.generator_vars) {
      names.push_back(R->names[i] + suffix);
      weights.push_back(R->weights[i]);
    }
  const PolyRingPtr E = make_ring(k, names, weights, 2 * others.size());
  std::vector<Polynomial> rel;
  for (const std::string suffix : {"_1", "_2"}) {
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < N; ++i) where.push_back(static_cast<std::size_t>(E->index_of(R->names[i] + suffix)));
    for (const auto& g : pres.source.ideal.generators) rel.push_back(rename(g, E, where));
  }
  const GroebnerBasis gbE = groebner(Ideal(E, rel));

  CoproductTable table;
  table.ring = copies_ring(pres, 2);
  const GroebnerBasis gb2 = copies_relations(pres, table.ring, 2);
  for (auto i : pres.generator_vars)
    table.delta.push_back(gb2.normal_form(restrict_to(gbE.normal_form(U[i].map_to(E)), table.ring)));

  // counit on both sides
  const std::size_t g = pres.generators.size();
  const GroebnerBasis gb1 = groebner(Ideal(pres.ring, pres.relations));
  table.counit_ok = true;
  for (std::size_t s = 0; s < g; ++s) {
    const Polynomial gen = gb1.normal_form(Polynomial::variable(pres.ring, s));
    for (int side = 0; side < 2; ++side) {
      std::vector<Polynomial> images;
      for (int c = 0; c < 2; ++c)
        for (std::size_t j = 0; j < g; ++j)
          images.push_back(c == side ? Polynomial::variable(pres.ring, j) : Polynomial(pres.ring));
      if (gb1.normal_form(table.delta[s].substitute(images)) != gen) table.counit_ok = false;
    }
  }

  // coassociativity in three factors
  const PolyRingPtr R3 = copies_ring(pres, 3);
  const GroebnerBasis gb3 = copies_relations(pres, R3, 3);
  auto shifted = [&](const Polynomial& p, std::size_t first) {
    std::vector<std::size_t> where;
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t j = 0; j < g; ++j) where.push_back((first + c) * g + j);
    return rename(p, R3, where);
  };
  table.coassociative = true;
  for (std::size_t s = 0; s < g; ++s) {
    std::vector<Polynomial> left, right;
    for (std::size_t j = 0; j < g; ++j) left.push_back(shifted(table.delta[j], 0));
    for (std::size_t j = 0; j < g; ++j) left.push_back(Polynomial::variable(R3, 2 * g + j));
    for (std::size_t j = 0; j < g; ++j) right.push_back(Polynomial::variable(R3, j));
    for (std::size_t j = 0; j < g; ++j) right.push_back(shifted(table.delta[j], 1));
    if (gb3.normal_form(table.delta[s].substitute(left)) != gb3.normal_form(table.delta[s].substitute(right)))
      table.coassociative = false;
  }
  return table;
}

std::optional<std::size_t> DistributionAlgebra::index_of(const Exponents& e) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].exp == e) return i;
  return std::nullopt;
}

DistributionAlgebra truncated_dist(const CentralizerPresentation& pres, const CoproductTable& delta, int N) {
  if (N < 0) throw InvalidInput("degree bound must be non-negative");
  if (delta.delta.size() != pres.generators.size()) throw InvalidInput("coproduct table does not match");
  DistributionAlgebra out;
  out.base = pres.base;
  out.truncation = N;
  const GroebnerBasis gb1 = groebner(Ideal(pres.ring, pres.relations));
  out.basis = standard_monomials(*pres.ring, gb1.leading_monomials(), N);
  for (const auto& m : out.basis) out.labels.push_back("dual(" + monomial_string(*pres.ring, m) + ")");
  const std::size_t b = out.basis.size();
  const std::size_t g = pres.generators.size();
  out.products.assign(b, std::vector<ScalarVector>(b));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (out.basis[i].degree + out.basis[j].degree <= N) out.products[i][j].assign(b, Scalar(0));

  const GroebnerBasis gb2 = copies_relations(pres, delta.ring, 2);
  std::map<Exponents, std::size_t> where;
  for (std::size_t i = 0; i < b; ++i) where[out.basis[i].exp] = i;
  // <d_i * d_j, m_c> = coefficient of m_i (x) m_j in Delta(m_c)
  for (std::size_t c = 0; c < b; ++c) {
    Polynomial dc = Polynomial::constant(delta.ring, Scalar(1));
    for (std::size_t s = 0; s < g; ++s)
      if (out.basis[c].exp[s] > 0) dc = dc * delta.delta[s].pow(static_cast<unsigned>(out.basis[c].exp[s]));
    dc = gb2.normal_form(dc);
    for (const auto& t : dc.terms()) {
      const Exponents left(t.mono.exp.begin(), t.mono.exp.begin() + static_cast<std::ptrdiff_t>(g));
      const Exponents right(t.mono.exp.begin() + static_cast<std::ptrdiff_t>(g), t.mono.exp.end());
      const auto li = where.find(left), ri = where.find(right);
      if (li == where.end() || ri == where.end()) continue;
      auto& slot = out.products[li->second][ri->second];
      if (!slot.empty()) slot[c] = t.coeff;
    }
  }
  return out;
}

}  // namespace loopdual

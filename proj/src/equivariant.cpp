#include "loopdual/equivariant.hpp"

namespace loopdual {

namespace {

Scalar pairing(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Scalar(static_cast<long>(s));
}

}  // namespace

ScalarMatrix f_form(const RootDatum& d) {
  const std::size_t n = static_cast<std::size_t>(d.dim());
  const Scalar tt = Scalar(static_cast<long>(killing_form(d, d.theta(), d.theta())));
  ScalarMatrix f(n, ScalarVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntVector x(n, 0), y(n, 0);
      x[i] = 1;
      y[j] = 1;
      f[i][j] = Scalar(static_cast<long>(-2 * killing_form(d, x, y))) / tt;
    }
  return f;
}

std::int64_t compute_nG(const RootDatum& d) {
  std::int64_t n = 1;
  for (const auto& row : f_form(d))
    for (const auto& v : row) n = lcm64(n, v.get_den().get_si());
  return n;
}

EquivariantElement build_eT(const RootDatum& d, const ChevalleyBasis& basis) {
  EquivariantElement eT;
  eT.e_part = principal_e(basis, d);
  eT.f_part = f_form(d);
  eT.n_G = compute_nG(d);
  // degree 2: e lives on simple root spaces, f pairs the torus with degree-2 variables
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    if (eT.e_part.coefficients[i] == 0) continue;
    if (i < basis.torus_dim() || basis.datum().roots()[basis.root_index(i)].height != 1)
      throw Error("e^T is not homogeneous of degree 2");
  }
  if (eT.f_part.size() != basis.torus_dim()) throw Error("f does not match the dual torus");
  return eT;
}

LieElement specialize_eT(const EquivariantElement& eT, const IntVector& s) {
  if (s.size() != eT.torus_dim()) throw InvalidInput("specialization point has the wrong length");
  LieElement v{Ring::rationals(), eT.e_part.coefficients};
  for (std::size_t k = 0; k < eT.torus_dim(); ++k)
    for (std::size_t j = 0; j < s.size(); ++j) v.coefficients[k] += eT.f_part[k][j] * static_cast<long>(s[j]);
  return v;
}

SemisimpleReport check_regular_semisimple(const ChevalleyBasis& basis, const LieElement& v) {
  const Ring q = Ring::rationals();
  const ScalarMatrix ad = ad_matrix(basis, change_ring(v, q));
  SemisimpleReport r;
  r.kernel_dim = basis.dim() - rank(ad, q);
  const UniPoly chi = characteristic_polynomial(ad);
  const UniPoly squarefree = poly_divide_exact(chi, poly_gcd(chi, derivative(chi)));
  r.semisimple = true;
  for (const auto& row : evaluate(squarefree, ad))
    for (const auto& x : row)
      if (x != 0) r.semisimple = false;
  r.regular_semisimple = r.semisimple && r.kernel_dim == basis.torus_dim();
  return r;
}

Scalar eT_discriminant(const EquivariantElement& eT, const ChevalleyBasis& basis, const IntVector& s) {
  const auto& roots = basis.datum().roots();
  Scalar disc = 1;
  for (std::size_t a = 0; a < basis.datum().num_positive(); ++a) {
    Scalar v = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        v += eT.f_part[i][j] * static_cast<long>(roots[a].character[i] * s[j]);
    disc *= v * v;
  }
  return disc;
}

ScalarVector localization_restriction(const RootDatum& d, const IntVector& lambda) {
  const std::size_t n = static_cast<std::size_t>(d.dim());
  if (lambda.size() != n) throw InvalidInput("cocharacter has the wrong length");
  const Scalar scale = Scalar(-2) / static_cast<long>(killing_form(d, d.theta(), d.theta()));
  ScalarVector out(n, Scalar(0));
  for (const auto& a : d.roots()) {
    const Scalar c = pairing(a.character, lambda);
    if (c == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += scale * c * static_cast<long>(a.character[i]);
  }
  return out;
}

}  // namespace loopdual

#pragma once

#include "loopdual/centralizer.hpp"

namespace loopdual {

/// f(x, y) = -2 Kil(x, y) / Kil(theta, theta) on the cocharacter basis.
ScalarMatrix f_form(const RootDatum& d);
/// Least n with n * f integral on X_*(T).
std::int64_t compute_nG(const RootDatum& d);

/// e^T = e + f; the basis must be built on dual_datum(d).
EquivariantElement build_eT(const RootDatum& d, const ChevalleyBasis& basis);
/// Substitutes an integer point s of Spec R_T (a cocharacter) into e^T.
LieElement specialize_eT(const EquivariantElement& eT, const IntVector& s);

struct SemisimpleReport {
  std::size_t kernel_dim = 0;
  bool semisimple = false;
  /// kernel dimension equals the torus dimension and ad is semisimple.
  bool regular_semisimple = false;
};

/// Semisimplicity via the squarefree part of the ad-characteristic polynomial.
SemisimpleReport check_regular_semisimple(const ChevalleyBasis& basis, const LieElement& v);
/// prod over positive roots g of the dual of f(g, s)^2; zero exactly off the regular semisimple locus.
Scalar eT_discriminant(const EquivariantElement& eT, const ChevalleyBasis& basis, const IntVector& s);

/// (-2 / Kil(theta, theta)) sum_a <a, lambda> a over the roots a, in X^*(T) coordinates.
ScalarVector localization_restriction(const RootDatum& d, const IntVector& lambda);

}  // namespace loopdual

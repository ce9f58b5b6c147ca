#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loopdual/scalar.hpp"

namespace loopdual {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major
using ScalarVector = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarVector>;

IntMatrix identity_int(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::int64_t dot(const IntVector& a, const IntVector& b);
/// Row vector times matrix.
IntVector row_times(const IntVector& v, const IntMatrix& m);

/// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  /// The diagonal entries, min(rows, cols) of them.
  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Hermite-reduced basis (nonzero rows) of the lattice spanned by the rows.
IntMatrix lattice_basis(const IntMatrix& generators);

ScalarMatrix to_scalar(const IntMatrix& m);
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b, const Ring& ring);
ScalarVector apply(const ScalarMatrix& m, const ScalarVector& v, const Ring& ring);

/// Rank over a field by exact Gaussian elimination.
std::size_t rank(ScalarMatrix m, const Ring& ring);
/// Determinant over Q.
Scalar determinant(ScalarMatrix m);
/// Inverse over Q; nullopt when singular.
std::optional<ScalarMatrix> inverse(ScalarMatrix m);
/// Solves x * m = v for a row vector x over Q (m square, nonsingular).
std::optional<ScalarVector> solve_row(const ScalarMatrix& m, const ScalarVector& v);

/// Dense univariate polynomial over Q, coefficient i multiplies x^i.
using UniPoly = std::vector<Scalar>;

UniPoly characteristic_polynomial(const ScalarMatrix& m);
UniPoly derivative(const UniPoly& p);
UniPoly poly_gcd(UniPoly a, UniPoly b);
UniPoly poly_divide_exact(const UniPoly& a, const UniPoly& b);
/// Evaluates p at a square matrix.
ScalarMatrix evaluate(const UniPoly& p, const ScalarMatrix& m);

}  // namespace loopdual

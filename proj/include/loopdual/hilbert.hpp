#pragma once

#include <string>
#include <vector>

#include "loopdual/groebner.hpp"

namespace loopdual {

/// Polynomial in t with integer coefficients, index = degree.
using TPoly = std::vector<std::int64_t>;

/// Truncated Hilbert-Poincare series with an optional closed form
/// numerator / prod (1 - t^d).
struct HilbertSeries {
  std::vector<std::int64_t> coefficients;  // degrees 0..N
  bool has_closed_form = false;
  TPoly numerator;
  std::vector<int> denominator;

  int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
  std::string closed_form() const;
  /// First degree where the coefficients differ, or -1.
  int first_difference(const HilbertSeries& o) const;
  bool operator==(const HilbertSeries& o) const { return coefficients == o.coefficients; }
};

/// Numerator K with HS = K / prod_i (1 - t^{w_i}) for R / (monomials).
TPoly hilbert_numerator(const std::vector<Monomial>& monomials, const std::vector<int>& weights);

/// Expands numerator / prod (1 - t^d) to degree N, cancelling (1 - t^d) factors
/// that divide the numerator exactly.
HilbertSeries series_from_rational(TPoly numerator, std::vector<int> denominator, int truncation);

/// Series of R / I for a homogeneous ideal (throws InvalidInput otherwise).
HilbertSeries hilbert_series(const Ideal& ideal, int truncation, const GroebnerOptions& options = {});
HilbertSeries hilbert_series(const GroebnerBasis& gb, int truncation);

/// scale * prod 1/(1 - t^d).
HilbertSeries product_series(const std::vector<int>& degrees, std::int64_t scale, int truncation);

std::string tpoly_string(const TPoly& p);

}  // namespace loopdual

#pragma once

#include <vector>

#include "loopdual/polynomial.hpp"

namespace loopdual {

struct Ideal {
  PolyRingPtr ring;
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(PolyRingPtr r, std::vector<Polynomial> gens);
  bool is_homogeneous() const;
};

struct GroebnerOptions {
  /// Cap on S-pairs taken from the queue; exceeding it throws BudgetExceeded.
  std::size_t max_pairs = 500000;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis, monic, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> elements, GroebnerStats stats);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const GroebnerStats& stats() const { return stats_; }
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> elements_;
  GroebnerStats stats_;
};

/// Buchberger with Gebauer-Moeller pair pruning and sugar selection.
GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& options = {});

/// Full reduction of p by the given polynomials (leading coefficients must be units).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors);

/// Krull dimension of R/I from the leading monomials; -1 for the unit ideal.
int ideal_dimension(const GroebnerBasis& gb);
int ideal_dimension(const Ideal& ideal, const GroebnerOptions& options = {});

/// Monomials not divisible by any leading monomial, of weighted degree <= max_degree.
std::vector<Monomial> standard_monomials(const PolyRing& ring, const std::vector<Monomial>& leading,
                                         int max_degree);

}  // namespace loopdual

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopdual/centralizer.hpp"

namespace loopdual {

/// A representation described by its weights in X^*(T) with multiplicities.
struct WeightedRep {
  std::vector<std::pair<IntVector, std::int64_t>> weights;
  /// When set, the weight multiset must be symmetric under negation.
  bool self_dual = false;

  void validate(const RootDatum& d) const;
};

WeightedRep adjoint_rep(const RootDatum& d);

/// Classical loop-space series |pi_0| prod 1/(1 - t^{2 m_i}); a central torus is
/// reported as a free rank instead of a series factor.
struct LoopSeries {
  HilbertSeries series;
  std::int64_t components = 1;
  int central_free_rank = 0;
};

LoopSeries omega_poincare(const RootDatum& d, int truncation);

/// (1/2) sum dim V_chi <chi, theta>^2.
std::int64_t degree_dV(const RootDatum& d, const WeightedRep& V);
/// -sum dim V_chi <chi, lambda> chi.
IntVector fixed_point_chern_weight(const RootDatum& d, const WeightedRep& V, const IntVector& lambda);

struct Verdict {
  std::string datum;
  std::string ring;
  bool series_equal = false;
  /// First differing coefficient, -1 when equal.
  int first_difference = -1;
  bool dimension_ok = false;
  bool flatness_ok = true;
  bool zcenter_ok = false;
  std::string observed;
  std::string oracle;
  int truncation = 0;
  bool pass() const { return series_equal && dimension_ok && flatness_ok && zcenter_ok; }
};

/// Compares a presentation with the loop-space oracle; `other_primes` are the series
/// of the same datum over other good fields (flatness).
Verdict compare_report(const CentralizerPresentation& pres, const RootDatum& d, int truncation,
                       const std::vector<HilbertSeries>& other_primes = {});

}  // namespace loopdual

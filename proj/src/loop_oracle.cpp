#include "loopdual/loop_oracle.hpp"

#include <algorithm>

namespace loopdual {

namespace {

std::int64_t dot64(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

HilbertSeries truncate_series(HilbertSeries hs, int n) {
  hs.coefficients.resize(static_cast<std::size_t>(n) + 1, 0);
  return hs;
}

}  // namespace

void WeightedRep::validate(const RootDatum& d) const {
  for (const auto& [chi, m] : weights) {
    if (chi.size() != static_cast<std::size_t>(d.dim())) throw InvalidInput("weight has the wrong length");
    if (m <= 0) throw InvalidInput("weight multiplicities must be positive");
  }
  if (!self_dual) return;
  auto sorted = weights;
  auto negated = weights;
  for (auto& w : negated)
    for (auto& x : w.first) x = -x;
  std::sort(sorted.begin(), sorted.end());
  std::sort(negated.begin(), negated.end());
  if (sorted != negated) throw InvalidInput("weight multiset is not symmetric under negation");
}

WeightedRep adjoint_rep(const RootDatum& d) {
  WeightedRep V;
  V.self_dual = true;
  for (const auto& a : d.roots()) V.weights.push_back({a.character, 1});
  V.weights.push_back({IntVector(static_cast<std::size_t>(d.dim()), 0), d.dim()});
  return V;
}

LoopSeries omega_poincare(const RootDatum& d, int truncation) {
  if (d.rank() == 0) throw InvalidInput("no loop-space series for a torus");
  const FiniteAbelianGroup pi0 = component_group(d);
  LoopSeries out;
  out.components = pi0.torsion_order();
  out.central_free_rank = pi0.free_rank();
  std::vector<int> degrees;
  for (auto m : exponents(d)) degrees.push_back(static_cast<int>(2 * m));
  out.series = product_series(degrees, out.components, truncation);
  return out;
}

std::int64_t degree_dV(const RootDatum& d, const WeightedRep& V) {
  V.validate(d);
  std::int64_t sum = 0;
  for (const auto& [chi, m] : V.weights) {
    const std::int64_t c = dot64(chi, d.theta());
    sum += m * c * c;
  }
  if (sum % 2 != 0) throw InvalidInput("half-sum is not integral: invalid weight multiset");
  return sum / 2;
}

IntVector fixed_point_chern_weight(const RootDatum& d, const WeightedRep& V, const IntVector& lambda) {
  V.validate(d);
  if (lambda.size() != static_cast<std::size_t>(d.dim())) throw InvalidInput("cocharacter has the wrong length");
  IntVector out(lambda.size(), 0);
  for (const auto& [chi, m] : V.weights) {
    const std::int64_t c = m * dot64(chi, lambda);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * chi[i];
  }
  return out;
}

Verdict compare_report(const CentralizerPresentation& pres, const RootDatum& d, int truncation,
                       const std::vector<HilbertSeries>& other_primes) {
  Verdict v;
  v.datum = d.name();
  v.ring = pres.base.name();
  v.truncation = truncation;
  const LoopSeries oracle = omega_poincare(d, truncation);
  const HilbertSeries observed = pres.hilbert.truncation() >= truncation
                                     ? truncate_series(pres.hilbert, truncation)
                                     : pres.presentation_series(truncation);
  v.first_difference = observed.first_difference(oracle.series);
  v.series_equal = v.first_difference < 0;
  v.dimension_ok = pres.dimension == d.dim();
  for (const auto& other : other_primes) {
    const int n = std::min(truncation, other.truncation());
    if (truncate_series(other, n).first_difference(truncate_series(observed, n)) >= 0) v.flatness_ok = false;
  }
  v.zcenter_ok = pres.zcenter.torsion_order() == oracle.components &&
                 pres.zcenter.free_rank() == oracle.central_free_rank;
  v.observed = pres.hilbert.closed_form();
  v.oracle = oracle.series.closed_form();
  return v;
}

}  // namespace loopdual

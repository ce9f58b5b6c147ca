#include "loopdual/hilbert.hpp"

#include <algorithm>

namespace loopdual {

namespace {

using Exps = std::vector<int>;

int weighted_degree(const Exps& e, const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w[i];
  return d;
}

bool exps_divide(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Drops generators divisible by another one; sorted, duplicates removed.
std::vector<Exps> minimalize(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exps& a, const Exps& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (exps_divide(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

void add_into(TPoly& acc, const TPoly& p, int shift, std::int64_t sign) {
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += sign * p[i];
}

TPoly multiply(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly one_minus(int d) {
  TPoly p(d + 1, 0);
  p[0] = 1;
  p[d] -= 1;
  return p;
}

TPoly numerator(std::vector<Exps> gens, const std::vector<int>& w) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  const std::size_t n = w.size();
  // pairwise coprime: product formula
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) ++count[i];
  const auto most = std::max_element(count.begin(), count.end());
  if (*most <= 1) {
    TPoly out{1};
    for (const auto& g : gens) out = multiply(out, one_minus(weighted_degree(g, w)));
    return out;
  }
  const std::size_t var = static_cast<std::size_t>(most - count.begin());
  std::vector<int> exps;
  for (const auto& g : gens)
    if (g[var] > 0) exps.push_back(g[var]);
  std::sort(exps.begin(), exps.end());
  int e = exps[(exps.size() - 1) / 2];
  Exps pivot(n, 0);
  pivot[var] = e;

  // K(I) = K(I + p) + t^{deg p} K(I : p)
  std::vector<Exps> plus = gens;
  plus.push_back(pivot);
  std::vector<Exps> quotient;
  for (auto g : gens) {
    g[var] = std::max(0, g[var] - e);
    quotient.push_back(std::move(g));
  }
  TPoly out = numerator(std::move(plus), w);
  add_into(out, numerator(std::move(quotient), w), e * w[var], 1);
  trim(out);
  return out;
}

// Exact division by (1 - t^d); false when it does not divide.
bool divide_one_minus(const TPoly& p, int d, TPoly& q) {
  // p = (1 - t^d) q  <=>  q[k] = p[k] + q[k - d]
  if (p.empty()) {
    q.clear();
    return true;
  }
  q.assign(p.size(), 0);
  for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[k] + (k >= static_cast<std::size_t>(d) ? q[k - d] : 0);
  // the tail beyond deg p - d must vanish
  for (std::size_t k = p.size() >= static_cast<std::size_t>(d) ? p.size() - d : 0; k < q.size(); ++k)
    if (q[k] != 0) return false;
  q.resize(p.size() >= static_cast<std::size_t>(d) ? p.size() - d : 0);
  trim(q);
  return true;
}

std::string power(int d) { return d == 1 ? "t" : "t^" + std::to_string(d); }

}  // namespace

std::string tpoly_string(const TPoly& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::int64_t c = p[k];
    if (c == 0) continue;
    const std::int64_t a = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0)
      out += std::to_string(a);
    else
      out += (a == 1 ? "" : std::to_string(a) + "*") + power(static_cast<int>(k));
  }
  return out.empty() ? "0" : out;
}

std::string HilbertSeries::closed_form() const {
  if (!has_closed_form) return "";
  std::string num = tpoly_string(numerator);
  if (denominator.empty()) return num;
  std::size_t nonzero = 0;
  for (auto c : numerator) nonzero += c != 0;
  if (nonzero > 1) num = "(" + num + ")";
  std::string den;
  for (int d : denominator) den += "(1 - " + power(d) + ")";
  return num + "/" + (denominator.size() > 1 ? "(" + den + ")" : den);
}

int HilbertSeries::first_difference(const HilbertSeries& o) const {
  const std::size_t n = std::max(coefficients.size(), o.coefficients.size());
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t a = k < coefficients.size() ? coefficients[k] : 0;
    const std::int64_t b = k < o.coefficients.size() ? o.coefficients[k] : 0;
    if (a != b) return static_cast<int>(k);
  }
  return -1;
}

TPoly hilbert_numerator(const std::vector<Monomial>& monomials, const std::vector<int>& weights) {
  std::vector<Exps> gens;
  for (const auto& m : monomials) {
    if (m.exp.size() != weights.size()) throw InvalidInput("monomial and weight lengths differ");
    gens.push_back(m.exp);
  }
  return numerator(std::move(gens), weights);
}

HilbertSeries series_from_rational(TPoly num, std::vector<int> den, int truncation) {
  if (truncation < 0) throw InvalidInput("truncation must be non-negative");
  for (int d : den)
    if (d <= 0) throw InvalidInput("denominator degrees must be positive");
  trim(num);
  HilbertSeries hs;
  hs.coefficients.assign(truncation + 1, 0);
  for (std::size_t k = 0; k < num.size() && k <= static_cast<std::size_t>(truncation); ++k)
    hs.coefficients[k] = num[k];
  for (int d : den)
    for (int k = d; k <= truncation; ++k) hs.coefficients[k] += hs.coefficients[k - d];

  // cancel (1 - t^d) factors, largest first
  std::sort(den.begin(), den.end(), std::greater<>());
  std::vector<int> kept;
  for (int d : den) {
    TPoly q;
    if (!num.empty() && divide_one_minus(num, d, q))
      num = std::move(q);
    else
      kept.push_back(d);
  }
  std::sort(kept.begin(), kept.end());
  hs.has_closed_form = true;
  hs.numerator = std::move(num);
  hs.denominator = std::move(kept);
  return hs;
}

HilbertSeries hilbert_series(const GroebnerBasis& gb, int truncation) {
  const PolyRing& ring = *gb.ring();
  for (const auto& g : gb.elements())
    if (!g.is_homogeneous())
      throw InvalidInput("Hilbert series needs a homogeneous ideal; " + g.to_string() + " is not");
  if (gb.is_unit()) return series_from_rational({}, {}, truncation);
  return series_from_rational(hilbert_numerator(gb.leading_monomials(), ring.weights), ring.weights,
                              truncation);
}

HilbertSeries hilbert_series(const Ideal& ideal, int truncation, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous())
    for (const auto& g : ideal.generators)
      if (!g.is_homogeneous())
        throw InvalidInput("Hilbert series needs a homogeneous ideal; " + g.to_string() + " is not");
  return hilbert_series(groebner(ideal, options), truncation);
}

HilbertSeries product_series(const std::vector<int>& degrees, std::int64_t scale, int truncation) {
  return series_from_rational({scale}, degrees, truncation);
}

}  // namespace loopdual

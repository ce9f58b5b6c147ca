#include "loopdual/groebner.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace loopdual {

Ideal::Ideal(PolyRingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    if (g.ring() != ring) g = g.map_to(ring);
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : generators)
    if (!g.is_homogeneous()) return false;
  return true;
}

GroebnerBasis::GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> elements, GroebnerStats stats)
    : ring_(std::move(ring)), elements_(std::move(elements)), stats_(stats) {}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.leading().mono);
  return out;
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  const PolyRing& ring = *p.ring();
  const Ring& k = ring.coefficients;
  std::vector<Term> remainder;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors)
      if (divides(g.leading().mono, lt.mono)) {
        hit = &g;
        break;
      }
    if (hit == nullptr) {
      remainder.push_back(lt);
      rest = rest.drop_leading();
      continue;
    }
    const Scalar factor = k.normalize(-lt.coeff * k.inverse(hit->leading().coeff));
    const Monomial shift = monomial_div(ring, lt.mono, hit->leading().mono);
    rest = rest + hit->mul_term(shift, factor);
  }
  return Polynomial::from_terms(p.ring(), std::move(remainder));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  const Polynomial q = p.ring() == ring_ ? p : p.map_to(ring_);
  return reduce(q, elements_);
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(PolyRingPtr ring, const GroebnerOptions& options) : ring_(std::move(ring)), options_(options) {}

  GroebnerBasis run(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(g.monic());
    // small leading monomials first: fewer redundant pairs
    std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
      return compare(*ring_, a.leading().mono, b.leading().mono) < 0;
    });
    for (const auto& g : input) {
      Polynomial h = reduce(g, active_polys());
      if (h.is_zero()) continue;
      if (add(h.monic(), sugar_of(g))) return unit();
    }
    while (!pairs_.empty()) {
      if (stats_.pairs_processed >= options_.max_pairs)
        throw BudgetExceeded("Groebner budget of " + std::to_string(options_.max_pairs) +
                             " S-pairs exhausted");
      const Pair p = pop();
      ++stats_.pairs_processed;
      Polynomial s = spoly(p);
      Polynomial h = reduce(s, active_polys());
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (add(h.monic(), p.sugar)) return unit();
    }
    return finish();
  }

 private:
  static int sugar_of(const Polynomial& p) { return p.degree(); }

  std::vector<Polynomial> active_polys() const {
    std::vector<Polynomial> out;
    out.reserve(active_.size());
    for (auto i : active_) out.push_back(all_[i]);
    return out;
  }

  GroebnerBasis unit() const {
    return GroebnerBasis(ring_, {Polynomial::constant(ring_, Scalar(1))}, stats_);
  }

  Polynomial spoly(const Pair& p) const {
    const PolyRing& r = *ring_;
    const Polynomial& f = all_[p.i];
    const Polynomial& g = all_[p.j];
    return f.mul_term(monomial_div(r, p.lcm, f.leading().mono), Scalar(1)) -
           g.mul_term(monomial_div(r, p.lcm, g.leading().mono), Scalar(1));
  }

  Pair pop() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int c = compare(*ring_, a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const PolyRing& r = *ring_;
    const Monomial& a = all_[i].leading().mono;
    const Monomial& b = all_[j].leading().mono;
    Pair p{std::min(i, j), std::max(i, j), monomial_lcm(r, a, b), 0};
    p.sugar = std::max(sugar_[i] + p.lcm.degree - a.degree, sugar_[j] + p.lcm.degree - b.degree);
    return p;
  }

  // Gebauer-Moeller update; returns true when h is a nonzero constant
  bool add(Polynomial h, int sugar) {
    if (h.is_constant()) return true;
    const std::size_t hi = all_.size();
    all_.push_back(std::move(h));
    sugar_.push_back(sugar);
    const Monomial& lh = all_[hi].leading().mono;

    std::vector<Pair> c;
    for (auto g : active_) c.push_back(make_pair(g, hi));
    std::vector<Pair> d;
    while (!c.empty()) {
      Pair p = c.front();
      c.erase(c.begin());
      const std::size_t other = p.i == hi ? p.j : p.i;
      bool keep = coprime(lh, all_[other].leading().mono);
      if (!keep) {
        keep = true;
        for (const auto& q : c)
          if (divides(q.lcm, p.lcm)) keep = false;
        for (const auto& q : d)
          if (divides(q.lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(std::move(p));
    }
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      const bool drop = divides(lh, p.lcm) &&
                        compare(*ring_, monomial_lcm(*ring_, all_[p.i].leading().mono, lh), p.lcm) != 0 &&
                        compare(*ring_, monomial_lcm(*ring_, all_[p.j].leading().mono, lh), p.lcm) != 0;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d) {
      const std::size_t other = p.i == hi ? p.j : p.i;
      if (!coprime(lh, all_[other].leading().mono)) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still;
    for (auto g : active_)
      if (!divides(lh, all_[g].leading().mono)) still.push_back(g);
    still.push_back(hi);
    active_ = std::move(still);
    return false;
  }

  GroebnerBasis finish() const {
    std::vector<Polynomial> g = active_polys();
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
      return compare(*ring_, a.leading().mono, b.leading().mono) < 0;
    });
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < g.size() && !redundant; ++j)
        if (j != i && divides(g[j].leading().mono, g[i].leading().mono) &&
            (compare(*ring_, g[j].leading().mono, g[i].leading().mono) != 0 || j < i))
          redundant = true;
      if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      reduced.push_back(reduce(minimal[i], others).monic());
    }
    return GroebnerBasis(ring_, std::move(reduced), stats_);
  }

  PolyRingPtr ring_;
  GroebnerOptions options_;
  GroebnerStats stats_;
  std::vector<Polynomial> all_;
  std::vector<int> sugar_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& options) {
  if (!ideal.ring) throw InvalidInput("ideal without a ring");
  if (!ideal.ring->coefficients.is_field())
    throw RingMismatch("Groebner bases are computed over Q or F_p only");
  if (ideal.generators.empty())
    return GroebnerBasis(ideal.ring, {}, GroebnerStats{});
  return Buchberger(ideal.ring, options).run(ideal.generators);
}

int ideal_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const std::size_t n = gb.ring()->size();
  if (n > 62) throw InvalidInput("too many variables for the dimension search");
  std::vector<std::uint64_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.exp[i] > 0) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  // largest set of variables containing no leading-monomial support
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> search = [&](std::size_t i, std::uint64_t set,
                                                                    int size) {
    if (size + static_cast<int>(n - i) <= best) return;
    if (i == n) {
      best = size;
      return;
    }
    const std::uint64_t with = set | (std::uint64_t{1} << i);
    bool ok = true;
    for (auto s : supports)
      if ((s & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok) search(i + 1, with, size + 1);
    search(i + 1, set, size);
  };
  search(0, 0, 0);
  return best;
}

int ideal_dimension(const Ideal& ideal, const GroebnerOptions& options) {
  return ideal_dimension(groebner(ideal, options));
}

std::vector<Monomial> standard_monomials(const PolyRing& ring, const std::vector<Monomial>& leading,
                                         int max_degree) {
  std::vector<Monomial> out;
  Exponents e(ring.size(), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int budget) {
    if (i == ring.size()) {
      Monomial m = make_monomial(ring, e);
      for (const auto& l : leading)
        if (divides(l, m)) return;
      out.push_back(std::move(m));
      return;
    }
    for (int k = 0; k * ring.weights[i] <= budget; ++k) {
      e[i] = k;
      walk(i + 1, budget - k * ring.weights[i]);
    }
    e[i] = 0;
  };
  walk(0, max_degree);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return compare(ring, a, b) < 0; });
  return out;
}

}  // namespace loopdual

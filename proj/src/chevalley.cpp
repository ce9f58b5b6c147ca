#include "loopdual/chevalley.hpp"

#include <map>

namespace loopdual {

bool LieElement::is_zero() const {
  for (const auto& c : coefficients)
    if (c != 0) return false;
  return true;
}

namespace {

std::string vec_label(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(RootDatum datum, bool inject_sign_error) : datum_(std::move(datum)) {
  const auto& roots = datum_.roots();
  const std::size_t count = roots.size();
  const std::size_t half = datum_.num_positive();
  const std::size_t r = static_cast<std::size_t>(datum_.rank());

  std::map<IntVector, std::size_t> index;
  for (std::size_t a = 0; a < count; ++a) index.emplace(roots[a].coefficients, a);
  sum_.assign(count, std::vector<int>(count, -1));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      IntVector s = roots[a].coefficients;
      for (std::size_t i = 0; i < r; ++i) s[i] += roots[b].coefficients[i];
      const auto it = index.find(s);
      if (it != index.end()) sum_[a][b] = static_cast<int>(it->second);
    }

  // W-invariant squared lengths from the symmetrized Cartan matrix
  const ScalarVector q = cartan_symmetrizer(datum_.cartan());
  std::vector<Scalar> norm(count, Scalar(0));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        norm[a] += q[i] * static_cast<long>(datum_.cartan()[i][j] * roots[a].coefficients[i] *
                                            roots[a].coefficients[j]);

  auto neg = [&](std::size_t a) { return a < half ? a + half : a - half; };
  std::vector<std::vector<std::int64_t>> pos(half, std::vector<std::int64_t>(half, 0));

  auto same_sign = [&](std::size_t a, std::size_t b) -> std::int64_t {
    if (a < half) return pos[a][b];
    return -pos[neg(a)][neg(b)];
  };
  // N for arbitrary roots, reduced to same-sign pairs via a + b + c = 0
  auto full = [&](std::size_t a, std::size_t b) -> std::int64_t {
    const int s = sum_[a][b];
    if (s < 0) return 0;
    if ((a < half) == (b < half)) return same_sign(a, b);
    const std::size_t c = neg(static_cast<std::size_t>(s));
    Scalar v;
    if ((c < half) == (b < half))
      v = norm[c] / norm[a] * static_cast<long>(same_sign(b, c));
    else
      v = norm[c] / norm[b] * static_cast<long>(same_sign(c, a));
    if (v.get_den() != 1) throw Error("non-integral structure constant");
    return v.get_num().get_si();
  };

  for (std::size_t xi = 0; xi < half; ++xi) {
    if (roots[xi].height < 2) continue;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < half; ++a)
      for (std::size_t b = a + 1; b < half; ++b)
        if (sum_[a][b] == static_cast<int>(xi)) pairs.emplace_back(a, b);
    if (pairs.empty()) throw Error("positive root of height > 1 is not a sum of positive roots");

    // extraspecial pair: smallest first entry
    const auto [g, d] = pairs.front();
    std::int64_t p = 0;
    {
      IntVector v = roots[d].coefficients;
      while (true) {
        for (std::size_t i = 0; i < r; ++i) v[i] -= roots[g].coefficients[i];
        bool is_root = false;
        for (const auto& rt : roots)
          if (rt.coefficients == v) is_root = true;
        if (!is_root) break;
        ++p;
      }
    }
    pos[g][d] = p + 1;
    pos[d][g] = -(p + 1);

    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [a, b] = pairs[k];
      Scalar acc = 0;
      const int bg = sum_[b][neg(g)];
      if (bg >= 0)
        acc += Scalar(static_cast<long>(full(b, neg(g)) * full(a, neg(d)))) / norm[bg];
      const int ag = sum_[a][neg(g)];
      if (ag >= 0)
        acc += Scalar(static_cast<long>(full(neg(g), a) * full(b, neg(d)))) / norm[ag];
      const Scalar v = norm[xi] / static_cast<long>(pos[g][d]) * acc;
      if (v.get_den() != 1) throw Error("non-integral structure constant");
      pos[a][b] = v.get_num().get_si();
      pos[b][a] = -pos[a][b];
    }
  }

  n_.assign(count, std::vector<std::int64_t>(count, 0));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) n_[a][b] = full(a, b);

  if (inject_sign_error) {
    // flip one constant without touching the ones derived from it
    for (std::size_t a = 0; a < half; ++a)
      for (std::size_t b = a + 1; b < half; ++b)
        if (sum_[a][b] >= 0) {
          n_[a][b] = -n_[a][b];
          n_[b][a] = -n_[b][a];
          return;
        }
  }
}

SparseColumn ChevalleyBasis::bracket_basis(std::size_t i, std::size_t j) const {
  const std::size_t t = torus_dim();
  const auto& roots = datum_.roots();
  if (i < t && j < t) return {};
  if (i < t) {
    const std::int64_t w = roots[j - t].character[i];
    if (w == 0) return {};
    return {{j, w}};
  }
  if (j < t) {
    const std::int64_t w = roots[i - t].character[j];
    if (w == 0) return {};
    return {{i, -w}};
  }
  const std::size_t a = i - t, b = j - t;
  if (static_cast<int>(b) == datum_.negative_of(static_cast<int>(a))) {
    SparseColumn out;
    for (std::size_t k = 0; k < t; ++k)
      if (roots[a].cocharacter[k] != 0) out.emplace_back(k, roots[a].cocharacter[k]);
    return out;
  }
  const int s = sum_[a][b];
  if (s < 0 || n_[a][b] == 0) return {};
  return {{x_index(static_cast<std::size_t>(s)), n_[a][b]}};
}

IntMatrix ChevalleyBasis::ad_basis(std::size_t i) const {
  const std::size_t n = dim();
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [row, c] : bracket_basis(i, j)) m[row][j] += c;
  return m;
}

std::string ChevalleyBasis::label(std::size_t i) const {
  if (i < torus_dim()) return "h" + std::to_string(i);
  return "x" + vec_label(datum_.roots()[i - torus_dim()].coefficients);
}

LieElement ChevalleyBasis::zero(const Ring& ring) const {
  return LieElement{ring, ScalarVector(dim(), Scalar(0))};
}

LieElement ChevalleyBasis::basis_element(std::size_t i, const Ring& ring) const {
  LieElement v = zero(ring);
  v.coefficients.at(i) = 1;
  return v;
}

ChevalleyBasis build_chevalley(const RootDatum& dual, bool inject_sign_error) {
  return ChevalleyBasis(dual, inject_sign_error);
}

LieElement bracket(const ChevalleyBasis& basis, const LieElement& a, const LieElement& b) {
  if (a.ring != b.ring) throw RingMismatch("bracket of elements over different rings");
  if (a.coefficients.size() != basis.dim() || b.coefficients.size() != basis.dim())
    throw InvalidInput("Lie element does not match the basis");
  LieElement out = basis.zero(a.ring);
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    if (a.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < basis.dim(); ++j) {
      if (b.coefficients[j] == 0) continue;
      const Scalar f = a.coefficients[i] * b.coefficients[j];
      for (const auto& [k, c] : basis.bracket_basis(i, j)) out.coefficients[k] += f * static_cast<long>(c);
    }
  }
  for (auto& c : out.coefficients) c = a.ring.normalize(c);
  return out;
}

ScalarMatrix ad_matrix(const ChevalleyBasis& basis, const LieElement& v) {
  const std::size_t n = basis.dim();
  ScalarMatrix m(n, ScalarVector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (v.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [row, c] : basis.bracket_basis(i, j))
        m[row][j] += v.coefficients[i] * static_cast<long>(c);
  }
  for (auto& row : m)
    for (auto& x : row) x = v.ring.normalize(x);
  return m;
}

LieElement principal_e(const ChevalleyBasis& basis, const RootDatum& g) {
  if (!(basis.datum() == dual_datum(g)))
    throw InvalidInput("principal_e: basis is not built on the dual of the given datum");
  const IntVector lengths = coroot_lengths(g);
  LieElement e = basis.zero(Ring::integers());
  for (std::size_t i = 0; i < lengths.size(); ++i)
    e.coefficients[basis.x_index(i)] = static_cast<long>(lengths[i]);
  return e;
}

LieElement sum_simple(const ChevalleyBasis& basis, const Ring& ring) {
  LieElement e = basis.zero(ring);
  for (int i = 0; i < basis.datum().rank(); ++i)
    e.coefficients[basis.x_index(static_cast<std::size_t>(i))] = 1;
  return e;
}

LieElement change_ring(const LieElement& v, const Ring& ring) {
  LieElement out{ring, {}};
  for (const auto& c : v.coefficients) out.coefficients.push_back(ring.image(c));
  return out;
}

std::size_t ad_kernel_dim(const ChevalleyBasis& basis, const LieElement& v, const Ring& ring) {
  const ScalarMatrix m = ad_matrix(basis, change_ring(v, ring));
  return basis.dim() - rank(m, ring);
}

std::vector<std::string> jacobi_violations(const ChevalleyBasis& basis, std::size_t limit) {
  const std::size_t n = basis.dim();
  std::vector<std::string> bad;
  std::vector<std::int64_t> acc(n, 0);
  auto nested = [&](std::size_t i, std::size_t j, std::size_t k) {
    for (const auto& [m, c] : basis.bracket_basis(j, k))
      for (const auto& [row, d] : basis.bracket_basis(i, m)) acc[row] += c * d;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        nested(i, j, k);
        nested(j, k, i);
        nested(k, i, j);
        for (auto x : acc)
          if (x != 0) {
            bad.push_back(basis.label(i) + "," + basis.label(j) + "," + basis.label(k));
            if (bad.size() >= limit) return bad;
            break;
          }
      }
  return bad;
}

std::vector<std::string> integrality_violations(const ChevalleyBasis& basis) {
  const auto& roots = basis.datum().roots();
  std::vector<std::string> bad;
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (basis.root_sum(a, b) < 0) continue;
      // p: largest with b - p a a root
      std::int64_t p = 0;
      std::size_t cur = b;
      const auto na = static_cast<std::size_t>(basis.datum().negative_of(static_cast<int>(a)));
      while (true) {
        const int nxt = basis.root_sum(cur, na);
        if (nxt < 0) break;
        cur = static_cast<std::size_t>(nxt);
        ++p;
      }
      const std::int64_t n = basis.structure_constant(a, b);
      if (n != p + 1 && n != -(p + 1))
        bad.push_back("N" + vec_label(roots[a].coefficients) + vec_label(roots[b].coefficients) +
                      " = " + std::to_string(n));
    }
  return bad;
}

}  // namespace loopdual

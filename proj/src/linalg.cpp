#include "loopdual/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace loopdual {

IntMatrix identity_int(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in pairing");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector row_times(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.size()) throw InvalidInput("dimension mismatch in row_times");
  IntVector out(m.empty() ? 0 : m[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  return out;
}

IntVector SmithForm::invariant_factors() const {
  IntVector d;
  for (std::size_t i = 0; i < diagonal.size() && (diagonal.empty() || i < diagonal[0].size()); ++i)
    d.push_back(diagonal[i][i]);
  return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row_a += k * row_b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t k) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += k * m[b][j];
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t k) {
  for (auto& row : m) row[a] += k * row[b];
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  IntMatrix d = input;
  IntMatrix u = identity_int(rows);
  IntMatrix v = identity_int(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (pr == rows || std::llabs(d[i][j]) < std::llabs(d[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = d[i][t] / d[t][t];
        if (q != 0) {
          add_row(d, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (d[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = d[t][j] / d[t][t];
        if (q != 0) {
          add_col(d, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (d[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      // enforce divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            add_row(d, t, i, 1);
            add_row(u, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (t < rows && t < cols && d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
  return SmithForm{std::move(u), std::move(d), std::move(v)};
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  if (generators.empty()) return {};
  IntMatrix m = generators;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    // Euclid down column c among rows >= row
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = row; i < m.size(); ++i)
        if (m[i][c] != 0 && (best == m.size() || std::llabs(m[i][c]) < std::llabs(m[best][c])))
          best = i;
      if (best == m.size()) break;
      std::swap(m[row], m[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        const std::int64_t q = m[i][c] / m[row][c];
        if (q != 0) add_row(m, i, row, -q);
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[row][c] == 0) continue;
    if (m[row][c] < 0)
      for (auto& x : m[row]) x = -x;
    for (std::size_t i = 0; i < row; ++i) {
      std::int64_t q = m[i][c] / m[row][c];
      if (m[i][c] - q * m[row][c] < 0) --q;
      if (q != 0) add_row(m, i, row, -q);
    }
    ++row;
  }
  m.resize(row);
  return m;
}

ScalarMatrix to_scalar(const IntMatrix& m) {
  ScalarMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i]) out[i].emplace_back(static_cast<long>(x));
  return out;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b, const Ring& ring) {
  if (a.empty()) return {};
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  ScalarMatrix c(a.size(), ScalarVector(cols, Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  for (auto& row : c)
    for (auto& x : row) x = ring.normalize(x);
  return c;
}

ScalarVector apply(const ScalarMatrix& m, const ScalarVector& v, const Ring& ring) {
  ScalarVector out(m.size(), Scalar(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    out[i] = ring.normalize(out[i]);
  }
  return out;
}

std::size_t rank(ScalarMatrix m, const Ring& ring) {
  if (!ring.is_field()) throw RingMismatch("rank requires a field");
  for (auto& row : m)
    for (auto& x : row) x = ring.image(x);
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const Scalar inv = ring.inverse(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Scalar f = ring.mul(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] = ring.sub(m[i][j], ring.mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

Scalar determinant(ScalarMatrix m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Scalar f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<ScalarMatrix> inverse(ScalarMatrix m) {
  const std::size_t n = m.size();
  ScalarMatrix inv(n, ScalarVector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    const Scalar p = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<ScalarVector> solve_row(const ScalarMatrix& m, const ScalarVector& v) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  ScalarVector x(m.size(), Scalar(0));
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) x[j] += v[i] * (*inv)[i][j];
  return x;
}

namespace {

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

// Faddeev-LeVerrier; exact over Q.
UniPoly characteristic_polynomial(const ScalarMatrix& a) {
  const std::size_t n = a.size();
  const Ring q = Ring::rationals();
  UniPoly coeff(n + 1, Scalar(0));
  coeff[n] = 1;
  ScalarMatrix m(n, ScalarVector(n, Scalar(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    ScalarMatrix am = multiply(a, m, q);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += coeff[n - k + 1];
    m = std::move(am);
    ScalarMatrix amk = multiply(a, m, q);
    Scalar tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk[i][i];
    coeff[n - k] = -tr / static_cast<long>(k);
  }
  return coeff;
}

UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

namespace {

// returns remainder of a / b, b nonzero
UniPoly poly_mod(UniPoly a, const UniPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

UniPoly poly_divide_exact(const UniPoly& a_in, const UniPoly& b) {
  UniPoly a = a_in;
  trim(a);
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.size() < b.size()) {
    if (!a.empty()) throw std::domain_error("inexact polynomial division");
    return {};
  }
  UniPoly q(a.size() - b.size() + 1, Scalar(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::domain_error("inexact polynomial division");
  return q;
}

ScalarMatrix evaluate(const UniPoly& p, const ScalarMatrix& m) {
  const std::size_t n = m.size();
  const Ring q = Ring::rationals();
  ScalarMatrix acc(n, ScalarVector(n, Scalar(0)));
  // Horner
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = multiply(acc, m, q);
    for (std::size_t i = 0; i < n; ++i) acc[i][i] += p[k];
  }
  return acc;
}

}  // namespace loopdual

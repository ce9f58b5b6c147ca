#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopdual/root_datum.hpp"

namespace loopdual {

/// Element of the Lie algebra, dense in the Chevalley basis.
struct LieElement {
  Ring ring = Ring::rationals();
  ScalarVector coefficients;

  bool is_zero() const;
  bool operator==(const LieElement& o) const {
    return ring == o.ring && coefficients == o.coefficients;
  }
};

using SparseColumn = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Chevalley Z-form attached to a root datum.
///
/// Basis order: h_0..h_{n-1} (the cocharacter basis of the datum's torus),
/// then x_a for every root a in the datum's root order.
/// [h_k, x_a] = <a, h_k> x_a, [x_a, x_-a] = h_a, [x_a, x_b] = N(a, b) x_{a+b}.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(RootDatum datum, bool inject_sign_error = false);

  const RootDatum& datum() const { return datum_; }
  std::size_t dim() const { return static_cast<std::size_t>(datum_.dim()) + datum_.roots().size(); }
  std::size_t torus_dim() const { return static_cast<std::size_t>(datum_.dim()); }
  std::size_t root_index(std::size_t basis_index) const { return basis_index - torus_dim(); }
  std::size_t x_index(std::size_t root) const { return torus_dim() + root; }

  /// N_{a,b} for root indices a, b; zero when a + b is not a root.
  std::int64_t structure_constant(std::size_t a, std::size_t b) const { return n_[a][b]; }
  /// Root index of a + b, or -1.
  int root_sum(std::size_t a, std::size_t b) const { return sum_[a][b]; }

  /// Sparse bracket of two basis vectors.
  SparseColumn bracket_basis(std::size_t i, std::size_t j) const;
  /// ad(b_i) as an integer matrix (column j = [b_i, b_j]).
  IntMatrix ad_basis(std::size_t i) const;
  std::string label(std::size_t i) const;

  LieElement zero(const Ring& ring) const;
  LieElement basis_element(std::size_t i, const Ring& ring) const;

 private:
  RootDatum datum_;
  std::vector<std::vector<std::int64_t>> n_;
  std::vector<std::vector<int>> sum_;
};

ChevalleyBasis build_chevalley(const RootDatum& dual, bool inject_sign_error = false);

LieElement bracket(const ChevalleyBasis& basis, const LieElement& a, const LieElement& b);
/// ad(v) over v's ring.
ScalarMatrix ad_matrix(const ChevalleyBasis& basis, const LieElement& v);
/// Nilpotent element sum_i |alpha_i|^2 x_i; basis must be built on dual_datum(g).
LieElement principal_e(const ChevalleyBasis& basis, const RootDatum& g);
/// e_1 = sum of the simple root vectors.
LieElement sum_simple(const ChevalleyBasis& basis, const Ring& ring);
std::size_t ad_kernel_dim(const ChevalleyBasis& basis, const LieElement& v, const Ring& ring);
/// Maps coefficients into another ring (exactly; throws RingMismatch on bad denominators).
LieElement change_ring(const LieElement& v, const Ring& ring);

/// Violations of the Jacobi identity on basis triples (empty when it holds).
std::vector<std::string> jacobi_violations(const ChevalleyBasis& basis, std::size_t limit = 10);
/// Pairs whose |N_{a,b}| differs from p + 1 (p maximal with b - p a a root).
std::vector<std::string> integrality_violations(const ChevalleyBasis& basis);

}  // namespace loopdual

#pragma once

#include <string>
#include <vector>

#include "loopdual/linalg.hpp"

namespace loopdual {

/// Finitely generated abelian group given by its nontrivial invariant factors
/// d_1 | d_2 | ...; a factor 0 stands for a copy of Z.
struct FiniteAbelianGroup {
  IntVector invariant_factors;

  static FiniteAbelianGroup from_smith(const IntVector& diagonal, std::size_t generators);

  std::int64_t torsion_order() const;
  int free_rank() const;
  bool is_finite() const { return free_rank() == 0; }
  std::string to_string() const;
  bool operator==(const FiniteAbelianGroup&) const = default;
};

/// One root of the datum together with its coroot.
///
/// `coefficients` are in the simple roots, `coroot_coefficients` in the simple
/// coroots. `character` lives in X^*(T) and `cocharacter` (the coroot) in
/// X_*(T), both in the coordinates of the stored lattice basis.
struct Root {
  IntVector coefficients;
  IntVector coroot_coefficients;
  IntVector character;
  IntVector cocharacter;
  int height = 0;
  bool positive() const { return height > 0; }
};

/// Reductive root datum whose derived group is almost simple.
///
/// Conventions: cartan[i][j] = <coroot_i, root_j>. The cocharacter lattice
/// X_*(T) has an integer basis whose rows (cochar_basis) are written in
/// coweight coordinates of the derived group followed by c central
/// coordinates. Simple roots are stored in the dual basis of X^*(T), simple
/// coroots in that basis of X_*(T); the pairing is the dot product.
class RootDatum {
 public:
  /// X_*(T) spanned by the given rows (coweight coords + central coords).
  static RootDatum from_basis(std::string name, const IntMatrix& cartan, const IntMatrix& basis,
                              int central_rank = 0);
  static RootDatum simply_connected(std::string name, const IntMatrix& cartan, int central_rank = 0);
  static RootDatum adjoint(std::string name, const IntMatrix& cartan, int central_rank = 0);
  /// Coroot lattice enlarged by extra coweights (rows in coweight coordinates).
  static RootDatum from_coweights(std::string name, const IntMatrix& cartan,
                                  const IntMatrix& extra_coweights);
  /// Direct construction from simple (co)roots in lattice coordinates.
  static RootDatum from_simple(std::string name, const IntMatrix& cartan,
                               const IntMatrix& simple_roots, const IntMatrix& simple_coroots);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  int central_rank() const { return dim() - rank(); }
  /// Rank of X_*(T).
  int dim() const { return dim_; }
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& cochar_basis() const { return cochar_basis_; }
  const IntMatrix& simple_roots() const { return simple_roots_; }
  const IntMatrix& simple_coroots() const { return simple_coroots_; }

  /// Positive roots by (height, coefficients descending), then the negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_positive() const { return roots_.size() / 2; }
  /// Index of the root with the given simple-root coefficients, or -1.
  int find_root(const IntVector& coefficients) const;
  /// Index of the root whose coroot is the given X_* vector, or -1.
  int find_coroot(const IntVector& cocharacter) const;
  int negative_of(int index) const;
  const Root& highest_root() const { return roots_[highest_]; }
  /// Coroot of the highest root, in X_* coordinates.
  const IntVector& theta() const { return roots_[highest_].cocharacter; }

  bool operator==(const RootDatum& o) const;

 private:
  RootDatum() = default;
  void build();

  std::string name_;
  int dim_ = 0;
  IntMatrix cartan_;
  IntMatrix cochar_basis_;
  IntMatrix simple_roots_;
  IntMatrix simple_coroots_;
  std::vector<Root> roots_;
  std::size_t highest_ = 0;
};

/// Checks the finite-type conditions; throws InvalidInput.
void validate_cartan(const IntMatrix& cartan);
/// Positive q with q_i cartan[i][j] = q_j cartan[j][i], q_0 = 1.
ScalarVector cartan_symmetrizer(const IntMatrix& cartan);

RootDatum load_datum(const std::string& json_text);
std::string datum_to_json(const RootDatum& d);
RootDatum preset(const std::string& name);
/// Canonical preset names (aliases such as "B2-sc" are accepted by preset() too).
std::vector<std::string> preset_names();
/// Cartan matrix of a finite type, e.g. ('B', 3).
IntMatrix cartan_of_type(char type, int rank);

const std::vector<Root>& enumerate_roots(const RootDatum& d);
std::int64_t killing_form(const RootDatum& d, const IntVector& x, const IntVector& y);
int length_ratio(const RootDatum& d);
/// |alpha_i|^2 for the simple coroots, normalized so short coroots have length 1.
IntVector coroot_lengths(const RootDatum& d);
/// X_*(T) / coroot lattice.
FiniteAbelianGroup component_group(const RootDatum& d);
/// X^*(T) / root lattice, the character group of the center.
FiniteAbelianGroup center_group(const RootDatum& d);
/// <sum of positive roots, alpha> for a coroot alpha in X_* coordinates.
std::int64_t two_rho_degree(const RootDatum& d, const IntVector& coroot);
IntVector exponents(const RootDatum& d);
RootDatum dual_datum(const RootDatum& d);

}  // namespace loopdual

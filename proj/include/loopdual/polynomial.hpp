#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loopdual/scalar.hpp"

namespace loopdual {

/// Variables, positive integer weights and coefficient ring of a polynomial ring.
///
/// Monomial order: weighted degree-reverse-lexicographic (ties broken by the
/// last differing variable). When `elimination_block` is k > 0 the weighted
/// degree in the first k variables is compared before anything else, which
/// makes the order an elimination order for those variables.
struct PolyRing {
  Ring coefficients = Ring::rationals();
  std::vector<std::string> names;
  std::vector<int> weights;
  std::size_t elimination_block = 0;

  std::size_t size() const { return names.size(); }
  int index_of(const std::string& name) const;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(const Ring& coefficients, std::vector<std::string> names,
                      std::vector<int> weights = {}, std::size_t elimination_block = 0);
/// Same variables and weights over another coefficient ring.
PolyRingPtr with_coefficients(const PolyRingPtr& ring, const Ring& coefficients);
/// Same variables, different elimination block.
PolyRingPtr with_elimination(const PolyRingPtr& ring, std::size_t block);

using Exponents = std::vector<int>;

struct Monomial {
  Exponents exp;
  int degree = 0;        // weighted
  int block_degree = 0;  // weighted degree in the elimination block
};

Monomial make_monomial(const PolyRing& ring, Exponents exp);
/// -1, 0, 1 as a <, =, > b in the ring's order.
int compare(const PolyRing& ring, const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const PolyRing& ring, const Monomial& a, const Monomial& b);
Monomial monomial_div(const PolyRing& ring, const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const PolyRing& ring, const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial; terms strictly decreasing in the ring order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(PolyRingPtr ring, const Scalar& c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial variable(PolyRingPtr ring, const std::string& name);
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, const Scalar& c);
  /// Parses "3*A^2 - 2*C", "(x + y)*(x - y)", "1/2*x" over the ring.
  static Polynomial parse(PolyRingPtr ring, const std::string& text);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  /// Maximal weighted degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// Degree-zero coefficient.
  Scalar constant_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  /// c * m * this
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  /// Monic copy (field coefficients).
  Polynomial monic() const;
  /// Copy without the leading term.
  Polynomial drop_leading() const;
  /// Replaces every variable by the given polynomial (all over one target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Maps into a ring with the same variable names (coefficients reduced as needed).
  Polynomial map_to(const PolyRingPtr& target) const;
  /// Evaluates at a point (coefficients of the point in the ring's coefficient ring).
  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Highest exponent of each variable.
  Exponents support_degrees() const;

  std::string to_string() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Builds from unsorted terms (combines duplicates, normalizes, drops zeros).
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

 private:
  void check_ring(const Polynomial& o) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_string(const PolyRing& ring, const Monomial& m);

}  // namespace loopdual

#pragma once

#include <map>
#include <string>

#include "satake/lattice.hpp"
#include "satake/qlaurent.hpp"

namespace satake {

/// Finitely supported sum of c_λ e^λ over the lattice with QLaurent
/// coefficients: the group ring Q[v^{±1}][Λ].
class LaurentPolynomial {
 public:
  using Terms = std::map<LatticeVector, QLaurent>;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(const LatticeVector& key, const QLaurent& coeff = QLaurent(1));
  /// 1 - c e^key
  static LaurentPolynomial binomial(const QLaurent& c, const LatticeVector& key);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const LatticeVector& key, const QLaurent& coeff);
  QLaurent coefficient(const LatticeVector& key) const;
  QLaurent constant_term(std::size_t rank) const { return coefficient(LatticeVector::zero(rank)); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial scaled(const QLaurent& c) const;
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Keys transformed by w, coefficients unchanged.
  LaurentPolynomial apply(const IntMatrix& w) const;
  /// e^λ -> e^{-λ}
  LaurentPolynomial bar() const;

  /// One "key\tcoefficient" row per term, lexicographic in the key.
  std::string to_table() const;

 private:
  Terms terms_;
};

/// Exact quotient a / divisor, dividing with the monomial order
/// (<witness, ·>, then lexicographic). Throws Error(NotPolynomial) when the
/// division leaves a remainder or a leading coefficient is not a unit.
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& divisor,
                               const LinearFunctional& witness);

}  // namespace satake

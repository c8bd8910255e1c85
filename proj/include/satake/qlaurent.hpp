#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "satake/rational.hpp"

namespace satake {

/// Laurent polynomial in v over Q, where v^2 = q. A power q^{k/2} is stored as
/// v^k, so every half-integral power of q is exact. Zero coefficients are never
/// stored.
class QLaurent {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  QLaurent() = default;
  QLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QLaurent(long constant) : QLaurent(Rational(constant)) {}  // NOLINT

  static QLaurent v_power(std::int64_t exponent, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Nonzero single-term elements are units of the ring.
  bool is_monomial() const { return terms_.size() == 1; }

  QLaurent& operator+=(const QLaurent& other);
  QLaurent& operator-=(const QLaurent& other);
  QLaurent& operator*=(const QLaurent& other);
  QLaurent operator-() const;

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  /// Adds coeff * v^exponent in place.
  void add_term(std::int64_t exponent, const Rational& coeff);

  /// Inverse of a monomial; throws Error(NotPolynomial) on non-units.
  QLaurent unit_inverse() const;

  /// q -> q^{-1}, i.e. v -> v^{-1}.
  QLaurent invert_q() const;

  /// Value at a rational v (v != 0).
  Rational evaluate_at_v(const Rational& v) const;

  /// Canonical text: ascending exponent, powers of q with halves, e.g.
  /// "q^-3/2 - 2*q^-1 + 1 + q".
  std::string str() const;

  static QLaurent parse(std::string_view text);

 private:
  Terms terms_;
};

/// q^{half_exponent}; half_exponent must be an integer multiple of 1/2.
QLaurent qmonomial(const Rational& half_exponent);
inline QLaurent qadd(const QLaurent& a, const QLaurent& b) { return a + b; }
inline QLaurent qmul(const QLaurent& a, const QLaurent& b) { return a * b; }
inline QLaurent qneg(const QLaurent& a) { return -a; }
inline QLaurent qinvert_q(const QLaurent& a) { return a.invert_q(); }

}  // namespace satake

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

/// Element of the coweight lattice, exact integer coordinates.
struct LatticeVector {
  std::vector<std::int64_t> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<std::int64_t> c) : coords(c) {}

  static LatticeVector zero(std::size_t rank) { return LatticeVector(std::vector<std::int64_t>(rank, 0)); }
  static LatticeVector unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  LatticeVector operator-() const;
  friend LatticeVector operator*(std::int64_t k, LatticeVector v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  /// Lexicographic on coordinates.
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) { return a.coords <=> b.coords; }
};

/// "1,-2,0"
std::string to_string(const LatticeVector& v);
LatticeVector parse_lattice_vector(std::string_view text);

/// Vector with half-integer coordinates, stored doubled.
struct HalfVector {
  std::vector<std::int64_t> twice;

  static HalfVector from(const LatticeVector& v);
  std::size_t rank() const { return twice.size(); }
  Rational operator[](std::size_t i) const { return make_rational(twice[i], 2); }
  /// Throws Error(BadParameters) when some coordinate is a proper half.
  LatticeVector to_lattice() const;
  friend bool operator==(const HalfVector&, const HalfVector&) = default;
};

/// "1/2,-1/2"
std::string to_string(const HalfVector& v);

/// Linear functional with half-integer coefficients; pairing with a lattice
/// vector is a half-integer.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  static LinearFunctional from_integers(std::vector<std::int64_t> coeffs);
  static LinearFunctional from_twice(std::vector<std::int64_t> twice_coeffs);
  /// Throws Error(BadParameters) unless every entry is a multiple of 1/2.
  static LinearFunctional from_rationals(const std::vector<Rational>& coeffs);

  std::size_t rank() const { return twice_.size(); }
  const std::vector<std::int64_t>& twice_coeffs() const { return twice_; }
  Rational coeff(std::size_t i) const { return make_rational(twice_[i], 2); }
  bool is_integral() const;

  /// 2<f, v>, always an integer.
  std::int64_t pair_twice(const LatticeVector& v) const;
  std::int64_t pair_twice(const HalfVector& v) const;  // requires the result to be even
  Rational pair(const LatticeVector& v) const { return make_rational(pair_twice(v), 2); }
  /// <f, v> for integral f; throws if the value is a proper half.
  std::int64_t pair_integer(const LatticeVector& v) const;

  LinearFunctional operator-() const;
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  explicit LinearFunctional(std::vector<std::int64_t> twice) : twice_(std::move(twice)) {}
  std::vector<std::int64_t> twice_;
};

/// "1/2,-1/2"
std::string to_string(const LinearFunctional& f);
LinearFunctional parse_functional(std::string_view text);

/// Square integer matrix acting on coordinates from the left.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  LatticeVector apply(const LatticeVector& v) const;
  HalfVector apply(const HalfVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) { return a.a_ <=> b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace satake

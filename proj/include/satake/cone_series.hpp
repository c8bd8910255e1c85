#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "satake/group_ring.hpp"
#include "satake/lattice.hpp"
#include "satake/qlaurent.hpp"

namespace satake {

/// Integer functional with <ξ, g> >= 1 on every generator. Throws
/// Error(NotStrictlyConvex) when no such functional exists. The choice is the
/// deterministic simplex optimum of Σ|ξ_i| + Σ(<ξ, g> - 1).
LinearFunctional cone_witness(std::span<const LatticeVector> generators);

/// A strictly convex cone with its degree functional and a translate.
struct ConeSpec {
  std::vector<LatticeVector> generators;
  LinearFunctional witness;
  LatticeVector base_point;

  /// Computes the witness; base point defaults to the origin.
  static ConeSpec make(std::vector<LatticeVector> generators, std::size_t rank);

  std::size_t rank() const { return base_point.rank(); }
  std::int64_t degree(const LatticeVector& v) const { return witness.pair_integer(v - base_point); }
  /// v - base_point is a nonnegative rational combination of the generators.
  bool contains(const LatticeVector& v) const;
  /// Same cone, base point reset to the origin.
  ConeSpec at_origin() const;
  /// The opposite cone -C with witness -ξ.
  ConeSpec negated() const;
};

/// Truncated series Σ c_λ e^λ, with every key in base + cone and
/// 0 <= degree(key) <= bound. Coefficients through the bound are exact.
class ConeSeries {
 public:
  using Terms = std::map<LatticeVector, QLaurent>;

  ConeSeries(ConeSpec spec, std::int64_t bound);
  static ConeSeries one(ConeSpec spec, std::int64_t bound);
  static ConeSeries from_polynomial(ConeSpec spec, std::int64_t bound, const LaurentPolynomial& p);

  const ConeSpec& spec() const { return spec_; }
  std::int64_t bound() const { return bound_; }
  const Terms& terms() const { return terms_; }

  /// Adds a term. Terms above the bound are dropped; a key outside the cone
  /// translate raises Error(DirectionNotInCone).
  void add_term(const LatticeVector& key, const QLaurent& coeff);

  /// Stored coefficient or zero; Error(OutOfBound) above the bound.
  QLaurent coefficient(const LatticeVector& key) const;

  /// "coords\tcoefficient" rows, lexicographic by coordinates.
  std::string to_table() const;

 private:
  friend struct SeriesAccess;
  ConeSpec spec_;
  std::int64_t bound_;
  Terms terms_;
};

/// Equality of all coefficients through the smaller of the two bounds.
bool series_equal(const ConeSeries& a, const ConeSeries& b);

/// (c, ν) standing for the factor 1 - c·e^ν.
using SeriesFactor = std::pair<QLaurent, LatticeVector>;

/// Convolution through min(bound). Specs must share the witness; the result
/// cone is generated by the union and based at the sum of the base points.
ConeSeries series_mul(const ConeSeries& a, const ConeSeries& b);

/// Σ_{i>=0} c^i e^{iν}, the expansion of (1 - c e^ν)^{-1} inside the cone.
/// Error(DirectionNotInCone) unless <ξ, ν> >= 1 and ν lies in the cone.
ConeSeries geometric_inverse(const QLaurent& c, const LatticeVector& direction, const ConeSpec& spec,
                             std::int64_t bound);

/// ∏ (1 - c e^ν) over the numerator times ∏ (1 - c e^ν)^{-1} over the
/// denominator, expanded in the cone (origin based) through `bound`.
ConeSeries expand_product(std::span<const SeriesFactor> numerator, std::span<const SeriesFactor> denominator,
                          const ConeSpec& spec, std::int64_t bound);

ConeSeries restrict_antidominant(const ConeSeries& s, std::span<const LinearFunctional> positive_roots);

inline QLaurent coefficient(const ConeSeries& s, const LatticeVector& key) { return s.coefficient(key); }

/// All nonnegative integer combinations of the generators with
/// <ξ, point> <= bound; every generator must have <ξ, g> >= 1.
std::vector<LatticeVector> semigroup_points(std::span<const LatticeVector> generators, const LinearFunctional& witness,
                                            std::int64_t bound);

}  // namespace satake

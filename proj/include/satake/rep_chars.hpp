#pragma once

#include <map>

#include "satake/group_ring.hpp"
#include "satake/lattice.hpp"
#include "satake/rational.hpp"
#include "satake/root_weyl.hpp"

namespace satake {

/// Weights of a finite-dimensional representation with multiplicities.
struct WeightMultiset {
  std::map<LatticeVector, std::int64_t> weights;

  std::int64_t dimension() const;
  /// Σ mult · e^weight
  LaurentPolynomial character() const;
  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

/// Weights of the irreducible representation of the dual group with lowest
/// weight `lowest`. The dual group's roots are the coroot vectors of `dual`,
/// its coroots the root functionals. Multiplicities come from Freudenthal's
/// recursion run from the highest weight (the dominant Weyl image of
/// `lowest`). Throws Error(NotAntidominant).
WeightMultiset lowest_weight_rep(const RootDatum& dual, const LatticeVector& lowest);

/// Weyl dimension formula for the same representation, as an exact rational.
Rational weyl_dimension(const RootDatum& dual, const LatticeVector& lowest);

/// Σ_w (-1)^{ℓ(w)} e^{ρ̌ - wρ̌}, ρ̌ the half-sum of positive coroot vectors.
LaurentPolynomial weyl_denominator(const RootDatum& dual);

/// ∏_{γ̌ > 0} (1 - e^{γ̌}) expanded.
LaurentPolynomial weyl_denominator_product(const RootDatum& dual);

}  // namespace satake

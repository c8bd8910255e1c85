#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "satake/lattice.hpp"
#include "satake/qlaurent.hpp"
#include "satake/rep_chars.hpp"
#include "satake/root_weyl.hpp"
#include "satake/spherical.hpp"

namespace satake {

/// Data for the partition-function formula of a split group H and a
/// representation V of its dual with lowest weight ρ̌.
struct LiDatum {
  WeightMultiset psi;      // Φ̌_H⁺ ⊎ weights of V
  LinearFunctional det;    // <det, ρ̌> = 1, zero on every coroot
  HalfVector rho_b;        // half-sum of positive coroots
  WeylGroup weyl;
};

/// Throws Error(BadParameters) when no functional on Λ vanishes on the
/// coroots and takes the value 1 on ρ̌.
LiDatum make_li_datum(const RootDatum& group, const LatticeVector& rho);

/// Memo for partition-function values, keyed by μ̌.
using LiCache = std::map<LatticeVector, QLaurent>;

/// Coefficient of e^μ̌ in ∏_{ν̌ ∈ Ψ} 1/(1 - q e^{-ν̌}): the sum of q^{|S|} over
/// sub-multisets S of Ψ with ΣS = -μ̌. Direct enumeration, bounded by an
/// integral functional positive on Ψ found by exhaustive search.
/// Error(BadParameters) if Ψ admits no such functional.
QLaurent li_partition(const LiDatum& d, const LatticeVector& mu, LiCache* cache = nullptr);

/// c_μ̌ = q^{<det,μ̌>} Σ_w (-1)^{ℓ(w)} 𝒫_Ψ(ρ̌_B - wρ̌_B - μ̌; q^{-1}), and 0 when <det,μ̌> < 0.
QLaurent li_coefficient(const LiDatum& d, const LatticeVector& mu, LiCache* cache = nullptr);

struct LiMismatch {
  LatticeVector mu;
  QLaurent li_value;
  QLaurent series_value;
};

struct LiReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<LiMismatch> mismatch;
  std::string str() const;
};

/// Compares c_μ̌ with the coefficients of L(ρ̌)·Asymp(Φ⁰) at every μ̌ of
/// witness degree <= bound (semigroup points of C'_X plus the series support).
LiReport li_equivalence_check(const LiDatum& d, const SphericalDatum& datum, const LatticeVector& rho,
                              std::int64_t bound);

}  // namespace satake

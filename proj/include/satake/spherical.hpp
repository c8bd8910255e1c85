#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "satake/cone_series.hpp"
#include "satake/group_ring.hpp"
#include "satake/rep_chars.hpp"
#include "satake/root_weyl.hpp"

namespace satake {

/// (θ̌, σ, r): contributes the factor 1 - σ q^{-r} e^{θ̌}.
struct ThetaTriple {
  LatticeVector theta;
  int sigma = 1;
  Rational r;  // half-integer

  /// σ q^{-r}
  QLaurent coefficient() const;
  friend bool operator==(const ThetaTriple&, const ThetaTriple&) = default;
};

/// Combinatorial data of a spherical variety: the lattice Λ_X, the positive
/// coroots Φ̌_X⁺ with their root functionals (generating W_X), the triples Θ⁺,
/// the functional ρ_{P(X)} and generators of the cone C_X.
class SphericalDatum {
 public:
  /// Validates every invariant; failures raise Error(BadParameters) naming
  /// the offending object (Θ⁺, ρ_P(X), C_X, Φ̌_X⁺).
  SphericalDatum(std::size_t rank, std::vector<ReflectionDatum> positive, std::vector<ThetaTriple> theta_plus,
                 LinearFunctional rho_px, std::vector<LatticeVector> cone_cx);

  std::size_t rank() const { return roots_.rank(); }
  const RootDatum& roots() const { return roots_; }
  const WeylGroup& weyl() const { return roots_.weyl(); }
  const std::vector<ThetaTriple>& theta_plus() const { return theta_plus_; }
  const LinearFunctional& rho_px() const { return rho_px_; }
  const std::vector<LatticeVector>& cone_cx() const { return cone_cx_; }
  /// C_X at the origin with its witness.
  const ConeSpec& cone() const { return cone_; }

  friend bool operator==(const SphericalDatum& a, const SphericalDatum& b) {
    return a.roots_ == b.roots_ && a.theta_plus_ == b.theta_plus_ && a.rho_px_ == b.rho_px_ &&
           a.cone_cx_ == b.cone_cx_;
  }

 private:
  RootDatum roots_;
  std::vector<ThetaTriple> theta_plus_;
  LinearFunctional rho_px_;
  std::vector<LatticeVector> cone_cx_;
  ConeSpec cone_;
};

/// Presets: "group" and "whittaker" take a group ("gl<n>", "sl2", "sp4");
/// "sp2n_gl2n" takes n. Errors: UnknownPreset, BadParameters.
SphericalDatum preset(std::string_view name, std::string_view parameter);
/// "group:gl2", "whittaker:gl3", "sp2n_gl2n:2"
SphericalDatum preset(std::string_view spec);

using SymmetricPolynomial = LaurentPolynomial;

/// P_λ = Σ_w w( ∏_{Θ⁺}(1 - σq^{-r}e^{θ̌}) / ∏_{Φ̌⁺}(1 - e^{γ̌}) · e^λ ), computed
/// by clearing to ∏_{γ̌ ∈ Φ̌}(1 - e^{γ̌}) and dividing exactly.
/// Error(NotPolynomial) if the division is not exact.
SymmetricPolynomial macdonald_p(const SphericalDatum& datum, const LatticeVector& lambda);

bool is_w_invariant(const LaurentPolynomial& p, const WeylGroup& w);

/// ∏_{Φ̌⁺}(1 - e^{γ̌}) / ∏_{Θ⁺}(1 - σq^{-r}e^{θ̌}) through degree `bound`.
ConeSeries basic_asymptotics(const SphericalDatum& datum, std::int64_t bound);
/// Same, expanded in a larger cone (which must share the expansion direction).
ConeSeries basic_asymptotics(const SphericalDatum& datum, const ConeSpec& spec, std::int64_t bound);

/// C'_X spanned by C_X and ρ̌. Error(RhoInConeSpan) when ρ̌ is in the
/// rational span of C_X.
ConeSpec lfunction_cone(const SphericalDatum& datum, const LatticeVector& rho);

/// ∏_{ν ∈ V}(1 - e^ν)^{-1} in C'_X through `bound`.
ConeSeries l_series(const SphericalDatum& datum, const WeightMultiset& weights, const LatticeVector& rho,
                    std::int64_t bound);
ConeSeries l_series(const SphericalDatum& datum, const LatticeVector& rho, std::int64_t bound);

struct HeckeRow {
  LatticeVector lambda;
  QLaurent series_coefficient;
  QLaurent hecke_value;  // q^{<ρ_P(X), λ>} · series_coefficient
};

/// Sat^{-1}(L(ρ̌)) on antidominant λ: nonzero rows only, sorted by λ.
struct HeckeValueTable {
  std::vector<HeckeRow> rows;
  std::int64_t bound = 0;

  std::string to_tsv() const;
  std::string to_records() const;
};

HeckeValueTable inverse_satake_lfun(const SphericalDatum& datum, const LatticeVector& rho, std::int64_t bound);

/// Torus inner product of two W_X-symmetric polynomials, scaled by the
/// constant P_0 (the normalized density is never materialized):
///   |W_X| · CT( P · Q̄ · ∏_{Φ̌⁺}(1 - e^{-γ̌}) / ∏_{Θ⁺}(1 - σq^{-r}e^{-θ̌}) ),
/// denominators expanded towards -C_X. Exact; the constant term only sees
/// finitely many terms.
QLaurent pairing(const SymmetricPolynomial& p, const SymmetricPolynomial& q, const SphericalDatum& datum);

/// Lattice points with Σ|λ_i| <= radius, lexicographic.
std::vector<LatticeVector> lattice_ball(std::size_t rank, std::int64_t radius);

}  // namespace satake

#include "satake/spherical.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

QLaurent ThetaTriple::coefficient() const { return qmonomial(-r) * QLaurent(static_cast<long>(sigma)); }

SphericalDatum::SphericalDatum(std::size_t rank, std::vector<ReflectionDatum> positive,
                               std::vector<ThetaTriple> theta_plus, LinearFunctional rho_px,
                               std::vector<LatticeVector> cone_cx)
    : roots_(rank, std::move(positive)),
      theta_plus_(std::move(theta_plus)),
      rho_px_(std::move(rho_px)),
      cone_cx_(std::move(cone_cx)) {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::BadParameters, what); };
  if (rho_px_.rank() != rank) bad("rho_P(X) has rank " + std::to_string(rho_px_.rank()));
  for (const auto& g : cone_cx_)
    if (g.rank() != rank) bad("C_X generator " + to_string(g) + " has wrong rank");
  try {
    cone_ = ConeSpec::make(cone_cx_, rank);
  } catch (const Error& e) {
    bad(std::string("C_X is not strictly convex: ") + e.what());
  }
  for (const auto& t : theta_plus_) {
    if (t.theta.rank() != rank) bad("Theta+ element " + to_string(t.theta) + " has wrong rank");
    if (t.sigma != 1 && t.sigma != -1) bad("Theta+ sign must be +1 or -1");
    if (!is_integer(2 * t.r)) bad("Theta+ exponent r = " + to_string(t.r) + " is not a half-integer");
    if (t.theta.is_zero() || !cone_.contains(t.theta))
      bad("Theta+ element " + to_string(t.theta) + " is not a nonzero element of C_X");
  }
  for (const auto& c : roots_.coroots())
    if (!cone_.contains(c)) bad("positive coroot " + to_string(c) + " of Phi_X+ is not in C_X");
}

namespace {

SphericalDatum group_like(const RootDatum& h, bool whittaker) {
  const std::size_t n = h.rank();
  std::vector<std::int64_t> twice_rho(n, 0);
  for (const auto& r : h.positive())
    for (std::size_t i = 0; i < n; ++i) twice_rho[i] += r.root.twice_coeffs()[i] / 2;
  std::vector<ThetaTriple> theta;
  if (!whittaker)
    for (const auto& c : h.coroots()) theta.push_back({c, 1, Rational(1)});
  return SphericalDatum(n, h.positive(), std::move(theta), LinearFunctional::from_twice(twice_rho), h.coroots());
}

RootDatum named_group(std::string_view g) {
  if (g == "sl2") return sl2_root_datum();
  if (g == "sp4") return sp4_root_datum();
  if (g.size() > 2 && g.substr(0, 2) == "gl") {
    std::size_t n = 0;
    auto tail = g.substr(2);
    auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec == std::errc() && p == tail.data() + tail.size() && n >= 1 && n <= 8) return gl_root_datum(n);
  }
  throw Error(ErrorKind::BadParameters, "unknown group '" + std::string(g) + "' (expected gl<n>, sl2 or sp4)");
}

}  // namespace

SphericalDatum preset(std::string_view name, std::string_view parameter) {
  if (name == "group") return group_like(named_group(parameter), false);
  if (name == "whittaker") return group_like(named_group(parameter), true);
  if (name == "sp2n_gl2n") {
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(parameter.data(), parameter.data() + parameter.size(), n);
    if (ec != std::errc() || p != parameter.data() + parameter.size() || n < 1 || n > 8)
      throw Error(ErrorKind::BadParameters, "sp2n_gl2n needs 1 <= n <= 8, got '" + std::string(parameter) + "'");
    RootDatum dual = gl_root_datum(n);
    std::vector<ThetaTriple> theta;
    for (const auto& c : dual.coroots()) theta.push_back({c, 1, Rational(2)});
    // Half-sum of the roots in the unipotent radical of the GL_2^n parabolic
    // of GL_2n; it factors through Λ_X as (n + 1 - 2i)_i.
    std::vector<std::int64_t> rho(n);
    for (std::size_t i = 0; i < n; ++i) rho[i] = static_cast<std::int64_t>(n + 1) - 2 * static_cast<std::int64_t>(i + 1);
    return SphericalDatum(n, dual.positive(), std::move(theta), LinearFunctional::from_integers(rho), dual.coroots());
  }
  throw Error(ErrorKind::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

SphericalDatum preset(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::UnknownPreset, "preset '" + std::string(spec) + "' must look like name:parameter");
  return preset(spec.substr(0, colon), spec.substr(colon + 1));
}

namespace {

LaurentPolynomial product_of_binomials(std::size_t rank, const std::vector<SeriesFactor>& factors) {
  LaurentPolynomial p = LaurentPolynomial::monomial(LatticeVector::zero(rank));
  for (const auto& [c, v] : factors) p = p * LaurentPolynomial::binomial(c, v);
  return p;
}

std::vector<SeriesFactor> theta_factors(const SphericalDatum& d, bool negate) {
  std::vector<SeriesFactor> out;
  for (const auto& t : d.theta_plus()) out.emplace_back(t.coefficient(), negate ? -t.theta : t.theta);
  return out;
}

std::vector<SeriesFactor> coroot_factors(const SphericalDatum& d, bool negate) {
  std::vector<SeriesFactor> out;
  for (const auto& c : d.roots().coroots()) out.emplace_back(QLaurent(1), negate ? -c : c);
  return out;
}

}  // namespace

SymmetricPolynomial macdonald_p(const SphericalDatum& datum, const LatticeVector& lambda) {
  if (lambda.rank() != datum.rank()) throw Error(ErrorKind::BadParameters, "lambda has wrong rank");
  const std::size_t n = datum.rank();
  // w(N⁺ e^λ / D⁺) = w(N⁺ D⁻ e^λ) / D with D = D⁺D⁻ W-invariant.
  LaurentPolynomial numerator = product_of_binomials(n, theta_factors(datum, false)) *
                                product_of_binomials(n, coroot_factors(datum, true)) *
                                LaurentPolynomial::monomial(lambda);
  LaurentPolynomial sum;
  for (const auto& w : datum.weyl().elements) sum += numerator.apply(w);

  auto all = coroot_factors(datum, false);
  auto neg = coroot_factors(datum, true);
  all.insert(all.end(), neg.begin(), neg.end());
  LaurentPolynomial denominator = product_of_binomials(n, all);
  LinearFunctional order = datum.cone().witness;
  return divide_exact(sum, denominator, order);
}

bool is_w_invariant(const LaurentPolynomial& p, const WeylGroup& w) {
  return std::all_of(w.elements.begin(), w.elements.end(), [&](const IntMatrix& m) { return p.apply(m) == p; });
}

ConeSeries basic_asymptotics(const SphericalDatum& datum, const ConeSpec& spec, std::int64_t bound) {
  auto num = coroot_factors(datum, false);
  auto den = theta_factors(datum, false);
  return expand_product(num, den, spec, bound);
}

ConeSeries basic_asymptotics(const SphericalDatum& datum, std::int64_t bound) {
  return basic_asymptotics(datum, datum.cone(), bound);
}

ConeSpec lfunction_cone(const SphericalDatum& datum, const LatticeVector& rho) {
  if (rho.rank() != datum.rank()) throw Error(ErrorKind::BadParameters, "rho has wrong rank");
  if (linalg::in_span(rho, datum.cone_cx()))
    throw Error(ErrorKind::RhoInConeSpan,
                "lowest weight " + to_string(rho) + " lies in the rational span of C_X; L(rho) has no expansion "
                "in a strictly convex cone");
  std::vector<LatticeVector> gens = datum.cone_cx();
  gens.push_back(rho);
  return ConeSpec::make(std::move(gens), datum.rank());
}

ConeSeries l_series(const SphericalDatum& datum, const WeightMultiset& weights, const LatticeVector& rho,
                    std::int64_t bound) {
  ConeSpec spec = lfunction_cone(datum, rho);
  std::vector<SeriesFactor> den;
  for (const auto& [w, m] : weights.weights)
    for (std::int64_t i = 0; i < m; ++i) den.emplace_back(QLaurent(1), w);
  return expand_product({}, den, spec, bound);
}

ConeSeries l_series(const SphericalDatum& datum, const LatticeVector& rho, std::int64_t bound) {
  lfunction_cone(datum, rho);
  return l_series(datum, lowest_weight_rep(datum.roots(), rho), rho, bound);
}

std::string HeckeValueTable::to_tsv() const {
  std::string out = "lambda\tseries\thecke\n";
  for (const auto& r : rows)
    out += to_string(r.lambda) + "\t" + r.series_coefficient.str() + "\t" + r.hecke_value.str() + "\n";
  return out;
}

std::string HeckeValueTable::to_records() const {
  std::string out;
  for (const auto& r : rows) {
    out += "{\"lambda\": [" + to_string(r.lambda) + "], \"series\": \"" + r.series_coefficient.str() +
           "\", \"hecke\": \"" + r.hecke_value.str() + "\"}\n";
  }
  return out;
}

HeckeValueTable inverse_satake_lfun(const SphericalDatum& datum, const LatticeVector& rho, std::int64_t bound) {
  ConeSpec spec = lfunction_cone(datum, rho);
  WeightMultiset weights = lowest_weight_rep(datum.roots(), rho);
  ConeSeries product = series_mul(l_series(datum, weights, rho, bound), basic_asymptotics(datum, spec, bound));
  auto roots = datum.roots().roots();
  ConeSeries restricted = restrict_antidominant(product, roots);

  HeckeValueTable table;
  table.bound = bound;
  for (const auto& [k, c] : restricted.terms()) {
    QLaurent hecke = QLaurent::v_power(datum.rho_px().pair_twice(k)) * c;
    table.rows.push_back({k, c, std::move(hecke)});
  }
  return table;
}

QLaurent pairing(const SymmetricPolynomial& p, const SymmetricPolynomial& q, const SphericalDatum& datum) {
  const std::size_t n = datum.rank();
  const ConeSpec& cone = datum.cone();
  LaurentPolynomial integrand = p * q.bar() * product_of_binomials(n, coroot_factors(datum, true));

  std::int64_t depth = -1;
  for (const auto& [k, c] : integrand.terms()) depth = std::max(depth, cone.witness.pair_integer(k));
  if (depth < 0) return QLaurent();

  auto den = theta_factors(datum, true);
  ConeSeries inverse = expand_product({}, den, cone.negated(), depth);
  QLaurent ct;
  for (const auto& [k, c] : integrand.terms()) {
    if (cone.witness.pair_integer(k) < 0) continue;
    ct += c * inverse.coefficient(-k);
  }
  return ct * QLaurent(static_cast<long>(datum.weyl().size()));
}

std::vector<LatticeVector> lattice_ball(std::size_t rank, std::int64_t radius) {
  std::vector<LatticeVector> out;
  LatticeVector cur = LatticeVector::zero(rank);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == rank) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = -left; x <= left; ++x) {
      cur.coords[i] = x;
      rec(i + 1, left - (x < 0 ? -x : x));
    }
    cur.coords[i] = 0;
  };
  rec(0, radius);
  return out;
}

}  // namespace satake

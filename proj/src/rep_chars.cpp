#include "satake/rep_chars.hpp"

#include <set>

#include "satake/cone_series.hpp"
#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

std::int64_t WeightMultiset::dimension() const {
  std::int64_t d = 0;
  for (const auto& [w, m] : weights) d += m;
  return d;
}

LaurentPolynomial WeightMultiset::character() const {
  LaurentPolynomial p;
  for (const auto& [w, m] : weights) p.add_term(w, QLaurent(static_cast<long>(m)));
  return p;
}

namespace {

void require_antidominant(const RootDatum& dual, const LatticeVector& lowest) {
  if (lowest.rank() != dual.rank())
    throw Error(ErrorKind::BadParameters, "lowest weight " + to_string(lowest) + " has wrong rank");
  if (!dual.is_antidominant(lowest))
    throw Error(ErrorKind::NotAntidominant, "lowest weight " + to_string(lowest) + " is not antidominant");
}

LatticeVector dominant_image(const RootDatum& dual, const LatticeVector& v) {
  for (const auto& w : dual.weyl().elements) {
    LatticeVector x = w.apply(v);
    if (dual.is_dominant(x)) return x;
  }
  throw Error(ErrorKind::BadParameters, "no dominant Weyl image of " + to_string(v));
}

// W-invariant positive definite form Σ_w (wx)·(wy), as a Gram matrix.
std::vector<std::vector<Rational>> invariant_form(const RootDatum& dual) {
  const std::size_t n = dual.rank();
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n, 0));
  for (const auto& w : dual.weyl().elements)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) gram[i][j] += static_cast<long>(w.at(k, i) * w.at(k, j));
  return gram;
}

// Vectors as doubled coordinates so that ρ̌ shifts stay integral.
Rational form(const std::vector<std::vector<Rational>>& gram, const std::vector<std::int64_t>& x2,
              const std::vector<std::int64_t>& y2) {
  Rational s = 0;
  for (std::size_t i = 0; i < x2.size(); ++i)
    for (std::size_t j = 0; j < y2.size(); ++j)
      if (x2[i] && y2[j]) s += gram[i][j] * static_cast<long>(x2[i] * y2[j]);
  return s / 4;
}

std::vector<std::int64_t> doubled_plus(const LatticeVector& v, const HalfVector& h) {
  std::vector<std::int64_t> r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) r[i] = 2 * v[i] + h.twice[i];
  return r;
}

}  // namespace

WeightMultiset lowest_weight_rep(const RootDatum& dual, const LatticeVector& lowest) {
  require_antidominant(dual, lowest);
  const LatticeVector highest = dominant_image(dual, lowest);
  const auto coroots = dual.coroots();
  const HalfVector rho = dual.rho_check();
  const auto gram = invariant_form(dual);

  WeightMultiset result;
  if (coroots.empty()) {
    result.weights.emplace(highest, 1);
    return result;
  }

  // Dominant weights are exactly the dominant μ with highest - μ in N·(simple
  // roots); all of them lie within the depth of the lowest weight.
  std::vector<LatticeVector> simple;
  for (const auto& s : dual.simple()) simple.push_back(s.coroot);
  const LinearFunctional xi = cone_witness(simple);
  const std::int64_t max_depth = xi.pair_integer(highest - lowest);

  std::map<std::int64_t, std::vector<LatticeVector>> by_depth;
  std::set<LatticeVector> seen{highest};
  std::vector<LatticeVector> frontier{highest};
  while (!frontier.empty()) {
    std::vector<LatticeVector> next;
    for (const auto& mu : frontier)
      for (const auto& a : simple) {
        LatticeVector nu = mu - a;
        if (xi.pair_integer(highest - nu) <= max_depth && seen.insert(nu).second) next.push_back(nu);
      }
    frontier = std::move(next);
  }
  for (const auto& mu : seen)
    if (dual.is_dominant(mu)) by_depth[xi.pair_integer(highest - mu)].push_back(mu);

  std::map<LatticeVector, Rational> dominant_mult;
  auto mult = [&](const LatticeVector& v) -> Rational {
    auto it = dominant_mult.find(dominant_image(dual, v));
    return it == dominant_mult.end() ? Rational(0) : it->second;
  };

  const auto top = doubled_plus(highest, rho);
  const Rational top_norm = form(gram, top, top);
  for (const auto& [depth, layer] : by_depth) {
    for (const auto& mu : layer) {
      if (depth == 0) {
        dominant_mult[mu] = 1;
        continue;
      }
      Rational sum = 0;
      for (const auto& beta : coroots) {
        const auto beta2 = HalfVector::from(beta).twice;
        for (std::int64_t k = 1;; ++k) {
          LatticeVector up = mu + k * beta;
          Rational m = mult(up);
          if (m == 0) break;
          sum += m * form(gram, HalfVector::from(up).twice, beta2);
        }
      }
      const auto shifted = doubled_plus(mu, rho);
      Rational denom = top_norm - form(gram, shifted, shifted);
      Rational m = 2 * sum / denom;
      if (!is_integer(m) || m < 0)
        throw Error(ErrorKind::BadParameters, "Freudenthal recursion produced non-integral multiplicity");
      if (m != 0) dominant_mult[mu] = m;
    }
  }

  for (const auto& [mu, m] : dominant_mult) {
    std::set<LatticeVector> orbit;
    for (const auto& w : dual.weyl().elements) orbit.insert(w.apply(mu));
    for (const auto& x : orbit) result.weights[x] = m.get_num().get_si();
  }
  return result;
}

Rational weyl_dimension(const RootDatum& dual, const LatticeVector& lowest) {
  require_antidominant(dual, lowest);
  const LatticeVector highest = dominant_image(dual, lowest);
  const HalfVector rho = dual.rho_check();
  Rational dim = 1;
  for (const auto& r : dual.positive()) {
    Rational top = r.root.pair(highest) + make_rational(r.root.pair_twice(rho), 2);
    Rational bottom = make_rational(r.root.pair_twice(rho), 2);
    dim *= top / bottom;
  }
  return dim;
}

LaurentPolynomial weyl_denominator(const RootDatum& dual) {
  const HalfVector rho = dual.rho_check();
  LaurentPolynomial sum;
  const auto& w = dual.weyl();
  for (std::size_t i = 0; i < w.size(); ++i) {
    HalfVector moved = w.elements[i].apply(rho);
    HalfVector diff{rho.twice};
    for (std::size_t j = 0; j < diff.rank(); ++j) diff.twice[j] -= moved.twice[j];
    sum.add_term(diff.to_lattice(), QLaurent(static_cast<long>(w.sign(i))));
  }
  return sum;
}

LaurentPolynomial weyl_denominator_product(const RootDatum& dual) {
  LaurentPolynomial p = LaurentPolynomial::monomial(LatticeVector::zero(dual.rank()));
  for (const auto& c : dual.coroots()) p = p * LaurentPolynomial::binomial(QLaurent(1), c);
  return p;
}

}  // namespace satake

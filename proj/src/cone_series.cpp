#include "satake/cone_series.hpp"

#include <algorithm>
#include <set>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"
#include "satake/root_weyl.hpp"

namespace satake {

LinearFunctional cone_witness(std::span<const LatticeVector> generators) {
  if (generators.empty()) return LinearFunctional();
  const std::size_t r = generators.front().rank();
  for (const auto& g : generators)
    if (g.is_zero()) throw Error(ErrorKind::BadParameters, "cone generator is zero");

  // Variables: u (r), w (r), s (m); ξ = u - w and <ξ, g> - s_g = 1.
  const std::size_t m = generators.size();
  const std::size_t n = 2 * r + m;
  linalg::Mat a(m, linalg::Vec(n, 0));
  linalg::Vec b(m, 1);
  linalg::Vec cost(n, 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      a[i][j] = static_cast<long>(generators[i][j]);
      a[i][r + j] = -static_cast<long>(generators[i][j]);
    }
    a[i][2 * r + i] = -1;
  }
  auto x = linalg::solve_lp(a, b, cost);
  if (!x) throw Error(ErrorKind::NotStrictlyConvex, "the cone contains a line; no positive functional exists");

  std::vector<Rational> xi(r);
  mpz_class l = 1;
  for (std::size_t j = 0; j < r; ++j) {
    xi[j] = (*x)[j] - (*x)[r + j];
    l = lcm(l, mpz_class(xi[j].get_den()));
  }
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& v : xi) {
    ints.push_back(v.get_num() * (l / v.get_den()));
    g = gcd(g, ints.back());
  }
  std::vector<std::int64_t> coeffs;
  for (const auto& z : ints) coeffs.push_back(mpz_class(z / g).get_si());
  return LinearFunctional::from_integers(std::move(coeffs));
}

ConeSpec ConeSpec::make(std::vector<LatticeVector> generators, std::size_t rank) {
  ConeSpec s;
  s.witness = generators.empty() ? LinearFunctional::from_integers(std::vector<std::int64_t>(rank, 0))
                                 : cone_witness(generators);
  s.generators = std::move(generators);
  s.base_point = LatticeVector::zero(rank);
  return s;
}

bool ConeSpec::contains(const LatticeVector& v) const { return linalg::in_cone(v - base_point, generators); }

ConeSpec ConeSpec::at_origin() const {
  ConeSpec s = *this;
  s.base_point = LatticeVector::zero(rank());
  return s;
}

ConeSpec ConeSpec::negated() const {
  ConeSpec s;
  for (const auto& g : generators) s.generators.push_back(-g);
  s.witness = -witness;
  s.base_point = -base_point;
  return s;
}

struct SeriesAccess {
  static void put(ConeSeries& s, const LatticeVector& key, const QLaurent& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = s.terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) s.terms_.erase(it);
    }
  }
  static void set(ConeSeries& s, const LatticeVector& key, QLaurent coeff) {
    if (!coeff.is_zero()) s.terms_.insert_or_assign(key, std::move(coeff));
  }
};

ConeSeries::ConeSeries(ConeSpec spec, std::int64_t bound) : spec_(std::move(spec)), bound_(bound) {
  if (bound_ < 0) throw Error(ErrorKind::BadParameters, "negative truncation bound");
}

ConeSeries ConeSeries::one(ConeSpec spec, std::int64_t bound) {
  ConeSeries s(std::move(spec), bound);
  s.add_term(LatticeVector::zero(s.spec_.rank()), QLaurent(1));
  return s;
}

ConeSeries ConeSeries::from_polynomial(ConeSpec spec, std::int64_t bound, const LaurentPolynomial& p) {
  ConeSeries s(std::move(spec), bound);
  for (const auto& [k, c] : p.terms()) s.add_term(k, c);
  return s;
}

void ConeSeries::add_term(const LatticeVector& key, const QLaurent& coeff) {
  if (coeff.is_zero()) return;
  std::int64_t d = spec_.degree(key);
  if (d < 0 || !spec_.contains(key))
    throw Error(ErrorKind::DirectionNotInCone, "key " + to_string(key) + " lies outside the cone translate");
  if (d > bound_) return;
  SeriesAccess::put(*this, key, coeff);
}

QLaurent ConeSeries::coefficient(const LatticeVector& key) const {
  std::int64_t d = spec_.degree(key);
  if (d > bound_)
    throw Error(ErrorKind::OutOfBound, "degree " + std::to_string(d) + " of " + to_string(key) +
                                           " exceeds truncation " + std::to_string(bound_));
  auto it = terms_.find(key);
  return it == terms_.end() ? QLaurent() : it->second;
}

std::string ConeSeries::to_table() const {
  std::string out;
  for (const auto& [k, c] : terms_) out += to_string(k) + "\t" + c.str() + "\n";
  return out;
}

bool series_equal(const ConeSeries& a, const ConeSeries& b) {
  const std::int64_t n = std::min(a.bound(), b.bound());
  auto within = [n](const ConeSeries& s, const LatticeVector& k) {
    std::int64_t d = s.spec().degree(k);
    return d <= n;
  };
  for (const auto& [k, c] : a.terms())
    if (within(a, k) && (!within(b, k) || b.coefficient(k) != c)) return false;
  for (const auto& [k, c] : b.terms())
    if (within(b, k) && (!within(a, k) || a.coefficient(k) != c)) return false;
  return true;
}

namespace {

std::vector<std::vector<const ConeSeries::Terms::value_type*>> by_degree(const ConeSeries& s) {
  std::vector<std::vector<const ConeSeries::Terms::value_type*>> buckets(s.bound() + 1);
  for (const auto& entry : s.terms()) buckets[s.spec().degree(entry.first)].push_back(&entry);
  return buckets;
}

void check_direction(const LatticeVector& v, const ConeSpec& spec, bool strict) {
  std::int64_t d = spec.witness.pair_integer(v);
  if ((strict && d < 1) || d < 0 || !linalg::in_cone(v, spec.generators))
    throw Error(ErrorKind::DirectionNotInCone,
                "direction " + to_string(v) + " does not point into the cone (witness value " +
                    std::to_string(d) + ")");
}

}  // namespace

ConeSeries series_mul(const ConeSeries& a, const ConeSeries& b) {
  if (a.spec().witness != b.spec().witness)
    throw Error(ErrorKind::IncompatibleSpec, "series have different witness functionals");
  ConeSpec spec;
  spec.witness = a.spec().witness;
  spec.generators = a.spec().generators;
  for (const auto& g : b.spec().generators)
    if (std::find(spec.generators.begin(), spec.generators.end(), g) == spec.generators.end())
      spec.generators.push_back(g);
  spec.base_point = a.spec().base_point + b.spec().base_point;
  const std::int64_t n = std::min(a.bound(), b.bound());
  ConeSeries out(std::move(spec), n);

  auto da = by_degree(a), db = by_degree(b);
  for (std::int64_t i = 0; i <= n && i <= a.bound(); ++i)
    for (std::int64_t j = 0; i + j <= n && j <= b.bound(); ++j)
      for (const auto* x : da[i])
        for (const auto* y : db[j]) SeriesAccess::put(out, x->first + y->first, x->second * y->second);
  return out;
}

ConeSeries geometric_inverse(const QLaurent& c, const LatticeVector& direction, const ConeSpec& spec,
                             std::int64_t bound) {
  check_direction(direction, spec, true);
  ConeSeries out(spec.at_origin(), bound);
  const std::int64_t step = spec.witness.pair_integer(direction);
  QLaurent power(1);
  LatticeVector key = LatticeVector::zero(spec.rank());
  for (std::int64_t d = 0; d <= bound && !power.is_zero(); d += step) {
    SeriesAccess::put(out, key, power);
    key += direction;
    power *= c;
  }
  return out;
}

ConeSeries expand_product(std::span<const SeriesFactor> numerator, std::span<const SeriesFactor> denominator,
                          const ConeSpec& spec, std::int64_t bound) {
  for (const auto& [c, v] : numerator) check_direction(v, spec, false);
  for (const auto& [c, v] : denominator) check_direction(v, spec, true);

  const ConeSpec origin = spec.at_origin();
  ConeSeries acc = ConeSeries::one(origin, bound);

  for (const auto& [c, v] : numerator) {
    ConeSeries next(origin, bound);
    const std::int64_t shift = origin.degree(v);
    for (const auto& [k, x] : acc.terms()) {
      SeriesAccess::put(next, k, x);
      if (origin.degree(k) + shift <= bound) SeriesAccess::put(next, k + v, -(c * x));
    }
    acc = std::move(next);
  }

  // Division by (1 - c e^v): r[λ] = s[λ] + c r[λ - v], in increasing degree.
  for (const auto& [c, v] : denominator) {
    const std::int64_t step = origin.degree(v);
    std::vector<std::set<LatticeVector>> pending(bound + 1);
    for (const auto& [k, x] : acc.terms()) pending[origin.degree(k)].insert(k);
    ConeSeries next(origin, bound);
    for (std::int64_t d = 0; d <= bound; ++d) {
      for (const auto& k : pending[d]) {
        QLaurent value;
        if (auto it = acc.terms().find(k); it != acc.terms().end()) value = it->second;
        if (auto it = next.terms().find(k - v); it != next.terms().end()) value += c * it->second;
        if (value.is_zero()) continue;
        SeriesAccess::set(next, k, std::move(value));
        if (d + step <= bound) pending[d + step].insert(k + v);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

ConeSeries restrict_antidominant(const ConeSeries& s, std::span<const LinearFunctional> positive_roots) {
  ConeSeries out(s.spec(), s.bound());
  for (const auto& [k, c] : s.terms())
    if (is_antidominant(k, positive_roots)) SeriesAccess::put(out, k, c);
  return out;
}

std::vector<LatticeVector> semigroup_points(std::span<const LatticeVector> generators, const LinearFunctional& witness,
                                            std::int64_t bound) {
  if (generators.empty()) return {};
  const std::size_t rank = generators.front().rank();
  for (const auto& g : generators)
    if (witness.pair_integer(g) < 1)
      throw Error(ErrorKind::DirectionNotInCone, "generator " + to_string(g) + " has nonpositive witness value");
  std::set<LatticeVector> seen{LatticeVector::zero(rank)};
  std::vector<LatticeVector> frontier{LatticeVector::zero(rank)};
  while (!frontier.empty()) {
    std::vector<LatticeVector> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        LatticeVector q = p + g;
        if (witness.pair_integer(q) <= bound && seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace satake

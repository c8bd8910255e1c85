#include "satake/li_oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

LiDatum make_li_datum(const RootDatum& group, const LatticeVector& rho) {
  const std::size_t n = group.rank();
  if (rho.rank() != n) throw Error(ErrorKind::BadParameters, "rho has wrong rank");
  LiDatum d;
  d.psi = lowest_weight_rep(group, rho);
  for (const auto& c : group.coroots()) d.psi.weights[c] += 1;
  d.rho_b = group.rho_check();
  d.weyl = group.weyl();

  auto coroots = group.coroots();
  for (const auto& k : linalg::integer_kernel(coroots, n)) {
    std::int64_t value = 0;
    for (std::size_t i = 0; i < n; ++i) value += k[i] * rho[i];
    if (value == 0) continue;
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(make_rational(k[i], value));
    d.det = LinearFunctional::from_rationals(coeffs);
    return d;
  }
  throw Error(ErrorKind::BadParameters,
              "no functional vanishing on the coroots takes the value 1 on " + to_string(rho));
}

namespace {

// Smallest sup-norm integral functional, lexicographically first, that is
// positive on every element of Ψ.
std::vector<std::int64_t> positive_functional(const WeightMultiset& psi, std::size_t rank) {
  constexpr std::int64_t kMaxEntry = 8;
  for (std::int64_t box = 1; box <= kMaxEntry; ++box) {
    std::vector<std::int64_t> f(rank, -box);
    while (true) {
      bool ok = std::all_of(psi.weights.begin(), psi.weights.end(), [&](const auto& entry) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rank; ++i) s += f[i] * entry.first[i];
        return s > 0;
      });
      if (ok) return f;
      std::size_t i = rank;
      while (i > 0 && f[i - 1] == box) f[--i] = -box;
      if (i == 0) break;
      ++f[i - 1];
    }
  }
  throw Error(ErrorKind::BadParameters, "the multiset Psi spans no strictly convex cone");
}

struct Enumerator {
  std::vector<LatticeVector> parts;  // one entry per element of Ψ, repeats kept
  std::vector<std::int64_t> height;  // <f, part> >= 1
  std::vector<std::int64_t> f;

  std::int64_t level(const LatticeVector& v) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * v[i];
    return s;
  }

  // Adds q^{count + k} for each way of writing `rest` as Σ_{j>=i} k_j parts[j].
  void run(std::size_t i, const LatticeVector& rest, std::int64_t count, QLaurent& out) const {
    if (i == parts.size()) {
      if (rest.is_zero()) out.add_term(2 * count, 1);
      return;
    }
    std::int64_t h = level(rest);
    for (std::int64_t k = 0; k * height[i] <= h; ++k) run(i + 1, rest - k * parts[i], count + k, out);
  }
};

}  // namespace

QLaurent li_partition(const LiDatum& d, const LatticeVector& mu, LiCache* cache) {
  if (cache) {
    auto it = cache->find(mu);
    if (it != cache->end()) return it->second;
  }
  Enumerator e;
  e.f = positive_functional(d.psi, mu.rank());
  for (const auto& [w, m] : d.psi.weights)
    for (std::int64_t i = 0; i < m; ++i) {
      e.parts.push_back(w);
      e.height.push_back(e.level(w));
    }
  QLaurent out;
  e.run(0, -mu, 0, out);
  if (cache) cache->emplace(mu, out);
  return out;
}

QLaurent li_coefficient(const LiDatum& d, const LatticeVector& mu, LiCache* cache) {
  std::int64_t det_twice = d.det.pair_twice(mu);
  if (det_twice < 0) return QLaurent();
  QLaurent sum;
  for (std::size_t i = 0; i < d.weyl.size(); ++i) {
    HalfVector w_rho = d.weyl.elements[i].apply(d.rho_b);
    HalfVector diff;
    for (std::size_t k = 0; k < w_rho.rank(); ++k) diff.twice.push_back(d.rho_b.twice[k] - w_rho.twice[k]);
    QLaurent p = li_partition(d, diff.to_lattice() - mu, cache).invert_q();
    sum += d.weyl.sign(i) == 1 ? p : -p;
  }
  return QLaurent::v_power(det_twice) * sum;
}

std::string LiReport::str() const {
  std::string out = std::string("status: ") + (ok ? "pass" : "mismatch") + "\nchecked: " + std::to_string(checked) + "\n";
  if (mismatch) {
    out += "mu: " + to_string(mismatch->mu) + "\nli: " + mismatch->li_value.str() +
           "\nseries: " + mismatch->series_value.str() + "\n";
  }
  return out;
}

LiReport li_equivalence_check(const LiDatum& d, const SphericalDatum& datum, const LatticeVector& rho,
                              std::int64_t bound) {
  ConeSpec spec = lfunction_cone(datum, rho);
  ConeSeries product = series_mul(l_series(datum, rho, bound), basic_asymptotics(datum, spec, bound));

  std::set<LatticeVector> candidates;
  for (auto& p : semigroup_points(spec.generators, spec.witness, bound)) candidates.insert(std::move(p));
  for (const auto& [k, c] : product.terms()) candidates.insert(k);

  LiReport report;
  LiCache cache;
  for (const auto& mu : candidates) {
    QLaurent expected = product.coefficient(mu);
    QLaurent got = li_coefficient(d, mu, &cache);
    ++report.checked;
    if (!(expected == got)) {
      report.ok = false;
      report.mismatch = LiMismatch{mu, got, expected};
      return report;
    }
  }
  return report;
}

}  // namespace satake

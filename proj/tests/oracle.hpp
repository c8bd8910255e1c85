#pragma once

// Reference computations that avoid the library's series and division code.

#include <map>
#include <random>
#include <vector>

#include "satake/cone_series.hpp"
#include "satake/lattice.hpp"
#include "satake/qlaurent.hpp"

namespace satake::testing {

using Dense = std::map<LatticeVector, QLaurent>;

inline QLaurent random_qlaurent(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms), exp(-6, 6), num(-9, 9), den(1, 4);
  QLaurent out;
  for (int i = terms(rng); i > 0; --i) out.add_term(exp(rng), make_rational(num(rng), den(rng)));
  return out;
}

inline std::int64_t dot(const std::vector<std::int64_t>& f, const LatticeVector& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * v[i];
  return s;
}

// Full convolution, dropping products of degree above `cap`.
inline Dense convolve(const Dense& a, const Dense& b, const std::vector<std::int64_t>& xi, std::int64_t cap) {
  Dense out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      LatticeVector k = ka + kb;
      if (dot(xi, k) > cap) continue;
      out[k] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// ∏(1 - c e^ν) ∏(1 - c e^ν)^{-1}, every factor expanded through degree `cap`.
inline Dense brute_product(const std::vector<SeriesFactor>& num, const std::vector<SeriesFactor>& den,
                           const std::vector<std::int64_t>& xi, std::size_t rank, std::int64_t cap) {
  Dense acc{{LatticeVector::zero(rank), QLaurent(1)}};
  for (const auto& [c, v] : num) {
    Dense f{{LatticeVector::zero(rank), QLaurent(1)}};
    f[v] += -c;
    std::erase_if(f, [](const auto& kv) { return kv.second.is_zero(); });
    acc = convolve(acc, f, xi, cap);
  }
  for (const auto& [c, v] : den) {
    Dense f;
    QLaurent power(1);
    LatticeVector key = LatticeVector::zero(rank);
    for (std::int64_t i = 0; dot(xi, key) <= cap; ++i) {
      if (!power.is_zero()) f[key] += power;
      power = power * c;
      key = key + v;
    }
    std::erase_if(f, [](const auto& kv) { return kv.second.is_zero(); });
    acc = convolve(acc, f, xi, cap);
  }
  return acc;
}

inline Dense truncate(const Dense& d, const std::vector<std::int64_t>& xi, std::int64_t bound) {
  Dense out;
  for (const auto& [k, c] : d)
    if (dot(xi, k) <= bound) out.emplace(k, c);
  return out;
}

struct RandomProduct {
  ConeSpec spec;
  std::vector<std::int64_t> xi;
  std::vector<SeriesFactor> num, den;
};

// Factor directions are random nonzero points of the semigroup of a random
// pointed cone; coefficients are random QLaurent values.
inline RandomProduct random_product(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank_d(1, 3), count_d(0, 3), small(0, 2), off(-1, 1);
  const std::size_t rank = static_cast<std::size_t>(rank_d(rng));
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    LatticeVector g = LatticeVector::unit(rank, i);
    if (i + 1 < rank) g.coords[i + 1] = off(rng);
    gens.push_back(g);
  }
  RandomProduct p{ConeSpec::make(gens, rank), {}, {}, {}};
  for (std::size_t i = 0; i < rank; ++i) p.xi.push_back(p.spec.witness.pair_integer(LatticeVector::unit(rank, i)));
  auto direction = [&] {
    while (true) {
      LatticeVector v = LatticeVector::zero(rank);
      for (const auto& g : gens) v = v + static_cast<std::int64_t>(small(rng)) * g;
      if (!v.is_zero()) return v;
    }
  };
  for (int i = count_d(rng); i > 0; --i) p.num.emplace_back(random_qlaurent(rng, 2), direction());
  for (int i = count_d(rng) + 1; i > 0; --i) p.den.emplace_back(random_qlaurent(rng, 2), direction());
  return p;
}

}  // namespace satake::testing

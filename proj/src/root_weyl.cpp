#include "satake/root_weyl.hpp"

#include <algorithm>
#include <set>

#include "satake/errors.hpp"

namespace satake {

ReflectionDatum ReflectionDatum::make(LinearFunctional root, LatticeVector coroot) {
  if (root.rank() != coroot.rank())
    throw Error(ErrorKind::BadParameters, "root and coroot ranks differ");
  if (!root.is_integral())
    throw Error(ErrorKind::BadParameters, "root " + to_string(root) + " is not integral");
  if (root.pair_twice(coroot) != 4)
    throw Error(ErrorKind::BadParameters,
                "<" + to_string(root) + ", " + to_string(coroot) + "> != 2");
  return ReflectionDatum{std::move(root), std::move(coroot)};
}

IntMatrix ReflectionDatum::matrix() const {
  const std::size_t n = coroot.rank();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= coroot[i] * (root.twice_coeffs()[j] / 2);
  return m;
}

LatticeVector reflect(const ReflectionDatum& r, const LatticeVector& v) {
  return v - r.root.pair_integer(v) * r.coroot;
}

WeylGroup enumerate_weyl(std::size_t rank, std::span<const ReflectionDatum> generators, std::size_t cap) {
  std::vector<IntMatrix> gens;
  for (const auto& g : generators) gens.push_back(g.matrix());

  WeylGroup w;
  std::set<IntMatrix> seen;
  std::vector<IntMatrix> layer{IntMatrix::identity(rank)};
  seen.insert(layer.front());
  int length = 0;
  while (!layer.empty()) {
    for (auto& m : layer) {
      w.elements.push_back(m);
      w.lengths.push_back(length);
    }
    std::set<IntMatrix> next;
    for (const auto& m : layer)
      for (const auto& s : gens) {
        IntMatrix p = s * m;
        if (!seen.contains(p)) next.insert(std::move(p));
      }
    for (const auto& m : next) seen.insert(m);
    if (seen.size() > cap)
      throw Error(ErrorKind::GroupTooLarge,
                  "Weyl group closure exceeds " + std::to_string(cap) + " elements");
    layer.assign(next.begin(), next.end());
    ++length;
  }
  return w;
}

bool is_antidominant(const LatticeVector& v, std::span<const LinearFunctional> positive_roots) {
  return std::all_of(positive_roots.begin(), positive_roots.end(),
                     [&](const LinearFunctional& a) { return a.pair_twice(v) <= 0; });
}

HalfVector half_sum_positive_coroots(std::span<const LatticeVector> positive_coroots, std::size_t rank) {
  HalfVector h{std::vector<std::int64_t>(rank, 0)};
  for (const auto& c : positive_coroots)
    for (std::size_t i = 0; i < rank; ++i) h.twice[i] += c.coords.at(i);
  return h;
}

RootDatum::RootDatum(std::size_t rank, std::vector<ReflectionDatum> positive, std::size_t cap)
    : rank_(rank), positive_(std::move(positive)) {
  std::set<LatticeVector> sums;
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    if (positive_[i].coroot.rank() != rank_)
      throw Error(ErrorKind::BadParameters, "coroot " + to_string(positive_[i].coroot) + " has wrong rank");
    for (std::size_t j = i + 1; j < positive_.size(); ++j)
      sums.insert(positive_[i].coroot + positive_[j].coroot);
  }
  for (const auto& r : positive_)
    if (!sums.contains(r.coroot)) simple_.push_back(r);
  weyl_ = enumerate_weyl(rank_, simple_, cap);
}

std::vector<LatticeVector> RootDatum::coroots() const {
  std::vector<LatticeVector> out;
  for (const auto& r : positive_) out.push_back(r.coroot);
  return out;
}

std::vector<LinearFunctional> RootDatum::roots() const {
  std::vector<LinearFunctional> out;
  for (const auto& r : positive_) out.push_back(r.root);
  return out;
}

bool RootDatum::is_antidominant(const LatticeVector& v) const {
  return std::all_of(positive_.begin(), positive_.end(),
                     [&](const ReflectionDatum& r) { return r.root.pair_twice(v) <= 0; });
}

bool RootDatum::is_dominant(const LatticeVector& v) const {
  return std::all_of(positive_.begin(), positive_.end(),
                     [&](const ReflectionDatum& r) { return r.root.pair_twice(v) >= 0; });
}

RootDatum gl_root_datum(std::size_t n) {
  std::vector<ReflectionDatum> pos;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      LatticeVector v = LatticeVector::unit(n, i) - LatticeVector::unit(n, j);
      pos.push_back(ReflectionDatum::make(LinearFunctional::from_integers(v.coords), v));
    }
  return RootDatum(n, std::move(pos));
}

RootDatum sl2_root_datum() {
  return RootDatum(1, {ReflectionDatum::make(LinearFunctional::from_integers({2}), LatticeVector{1})});
}

RootDatum sp4_root_datum() {
  auto r = [](std::vector<std::int64_t> root, LatticeVector coroot) {
    return ReflectionDatum::make(LinearFunctional::from_integers(std::move(root)), std::move(coroot));
  };
  return RootDatum(2, {r({1, -1}, {1, -1}), r({0, 2}, {0, 1}), r({1, 1}, {1, 1}), r({2, 0}, {1, 0})});
}

}  // namespace satake

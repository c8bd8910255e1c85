#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "satake/lattice.hpp"

namespace satake {

inline constexpr std::size_t kDefaultWeylCap = 50000;

/// A reflection s(x) = x - <root, x> coroot on the lattice, with <root, coroot> = 2.
struct ReflectionDatum {
  LinearFunctional root;
  LatticeVector coroot;

  /// Validates <root, coroot> = 2 and integrality of the root.
  static ReflectionDatum make(LinearFunctional root, LatticeVector coroot);
  IntMatrix matrix() const;
  friend bool operator==(const ReflectionDatum&, const ReflectionDatum&) = default;
};

LatticeVector reflect(const ReflectionDatum& r, const LatticeVector& v);

struct WeylGroup {
  std::vector<IntMatrix> elements;  // elements[0] is the identity
  std::vector<int> lengths;

  std::size_t size() const { return elements.size(); }
  int sign(std::size_t i) const { return lengths[i] % 2 == 0 ? 1 : -1; }
};

/// Breadth-first closure of the generated group; lengths are word lengths in
/// the generators. Elements are ordered by length, then by matrix entries.
/// Throws Error(GroupTooLarge) past `cap` elements.
WeylGroup enumerate_weyl(std::size_t rank, std::span<const ReflectionDatum> generators,
                         std::size_t cap = kDefaultWeylCap);

/// <alpha, v> <= 0 for every listed positive root.
bool is_antidominant(const LatticeVector& v, std::span<const LinearFunctional> positive_roots);

HalfVector half_sum_positive_coroots(std::span<const LatticeVector> positive_coroots, std::size_t rank);

/// A reduced root system on the lattice, given by all its positive reflections
/// (root functional plus coroot vector). For the dual group of a spherical
/// variety the coroot vectors are the roots of that dual group.
class RootDatum {
 public:
  RootDatum() = default;
  RootDatum(std::size_t rank, std::vector<ReflectionDatum> positive, std::size_t cap = kDefaultWeylCap);

  std::size_t rank() const { return rank_; }
  const std::vector<ReflectionDatum>& positive() const { return positive_; }
  std::vector<LatticeVector> coroots() const;
  std::vector<LinearFunctional> roots() const;
  /// Positive reflections whose coroot is not a sum of two positive coroots.
  const std::vector<ReflectionDatum>& simple() const { return simple_; }
  const WeylGroup& weyl() const { return weyl_; }
  HalfVector rho_check() const { return half_sum_positive_coroots(coroots(), rank_); }
  bool is_antidominant(const LatticeVector& v) const;
  bool is_dominant(const LatticeVector& v) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.positive_ == b.positive_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<ReflectionDatum> positive_;
  std::vector<ReflectionDatum> simple_;
  WeylGroup weyl_;
};

/// Type A_{n-1} inside GL_n: roots and coroots e_i - e_j, i < j.
RootDatum gl_root_datum(std::size_t n);
/// Rank-one datum with cocharacter lattice spanned by the coroot.
RootDatum sl2_root_datum();
/// Sp_4 on its cocharacter lattice Z^2: coroots form a B_2 system.
RootDatum sp4_root_datum();

}  // namespace satake

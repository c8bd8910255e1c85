#include <doctest.h>

#include "satake/rep_chars.hpp"
#include "test_support.hpp"

using namespace satake;

namespace {

void check_invariant(const RootDatum& d, const WeightMultiset& m) {
  for (const auto& w : d.weyl().elements) {
    WeightMultiset moved;
    for (const auto& [k, mult] : m.weights) moved.weights[w.apply(k)] += mult;
    CHECK(moved == m);
  }
}

}  // namespace

TEST_CASE("standard representations") {
  WeightMultiset v2 = lowest_weight_rep(gl_root_datum(2), {0, 1});
  CHECK(v2.weights == std::map<LatticeVector, std::int64_t>{{{1, 0}, 1}, {{0, 1}, 1}});
  WeightMultiset v3 = lowest_weight_rep(gl_root_datum(3), {0, 0, 1});
  CHECK(v3.weights ==
        std::map<LatticeVector, std::int64_t>{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
}

TEST_CASE("adjoint of the rank-one datum") {
  RootDatum a1 = sl2_root_datum();
  LatticeVector alpha = a1.coroots().front();
  WeightMultiset adj = lowest_weight_rep(a1, -alpha);
  CHECK(adj.weights == std::map<LatticeVector, std::int64_t>{{-alpha, 1}, {LatticeVector{0}, 1}, {alpha, 1}});
}

TEST_CASE("not antidominant") {
  CHECK_ERROR_KIND(lowest_weight_rep(gl_root_datum(2), {1, 0}), ErrorKind::NotAntidominant);
}

TEST_CASE("dimension and invariance") {
  struct Case {
    RootDatum d;
    std::vector<LatticeVector> lowest;
  };
  std::vector<Case> cases = {
      {gl_root_datum(2), {{0, 1}, {0, 2}, {-1, 3}, {2, 2}}},
      {gl_root_datum(3), {{0, 0, 1}, {0, 0, 2}, {-1, 0, 1}, {-2, 0, 1}, {-1, -1, 2}, {-3, 0, 2}}},
      {gl_root_datum(4), {{0, 0, 0, 1}, {-1, 0, 0, 1}, {-1, 0, 1, 1}, {0, 0, 0, 3}}},
      {sp4_root_datum(), {{-1, 0}, {-1, -1}, {-2, -1}, {-3, 0}, {-2, -2}}},
  };
  for (const auto& c : cases)
    for (const auto& l : c.lowest) {
      CAPTURE(to_string(l));
      WeightMultiset m = lowest_weight_rep(c.d, l);
      CHECK(Rational(static_cast<long>(m.dimension())) == weyl_dimension(c.d, l));
      check_invariant(c.d, m);
      CHECK(m.weights.begin()->second >= 1);
      CHECK(m.weights.count(l) == 1);
      CHECK(m.weights.at(l) == 1);
    }
  // Adjoint of GL3 on the lattice: the zero weight has multiplicity 2.
  WeightMultiset adj = lowest_weight_rep(gl_root_datum(3), {-1, 0, 1});
  CHECK(adj.dimension() == 8);
  CHECK(adj.weights.at(LatticeVector::zero(3)) == 2);
  // SO5 on Sp4's cocharacters: the 5-dimensional module has weights ±ε_i and 0.
  WeightMultiset five = lowest_weight_rep(sp4_root_datum(), {-1, 0});
  CHECK(five.dimension() == 5);
}

TEST_CASE("Weyl denominator") {
  LaurentPolynomial a1 = weyl_denominator(gl_root_datum(2));
  CHECK(a1 == LaurentPolynomial::binomial(QLaurent(1), {1, -1}));
  LaurentPolynomial a2 = weyl_denominator(gl_root_datum(3));
  CHECK(a2.size() == 6);
  for (const RootDatum& d : {gl_root_datum(2), gl_root_datum(3), gl_root_datum(4), sp4_root_datum(), sl2_root_datum()})
    CHECK(weyl_denominator(d) == weyl_denominator_product(d));
  RootDatum trivial(2, {});
  CHECK(weyl_denominator(trivial) == LaurentPolynomial::monomial(LatticeVector::zero(2)));
}

TEST_CASE("character") {
  WeightMultiset v = lowest_weight_rep(gl_root_datum(2), {0, 2});
  LaurentPolynomial ch = v.character();
  CHECK(ch.size() == 3);
  CHECK(ch.coefficient({1, 1}).is_one());
}

#include <doctest.h>

#include "oracle.hpp"
#include "satake/cone_series.hpp"
#include "satake/linalg.hpp"
#include "test_support.hpp"

using namespace satake;
using namespace satake::testing;

namespace {

const LatticeVector kAlpha{1, -1};
const LatticeVector kEps1{1, 0};
const LatticeVector kEps2{0, 1};

ConeSpec gl2_prime() { return ConeSpec::make({kAlpha, kEps2}, 2); }

}  // namespace

TEST_CASE("cone_witness") {
  std::vector<LatticeVector> gens{kAlpha, kEps2};
  LinearFunctional xi = cone_witness(gens);
  for (const auto& g : gens) CHECK(xi.pair_integer(g) >= 1);
  CHECK(xi.is_integral());
  std::vector<LatticeVector> single{kAlpha};
  CHECK(cone_witness(single).pair_integer(kAlpha) >= 1);
  std::vector<LatticeVector> line{{1, 0}, {-1, 0}};
  CHECK_ERROR_KIND(cone_witness(line), ErrorKind::NotStrictlyConvex);
  std::vector<LatticeVector> with_zero{{0, 0}};
  CHECK_ERROR_KIND(cone_witness(with_zero), ErrorKind::BadParameters);
  std::vector<LatticeVector> plane{{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}};
  CHECK_ERROR_KIND(cone_witness(plane), ErrorKind::NotStrictlyConvex);
}

TEST_CASE("cone membership") {
  ConeSpec spec = gl2_prime();
  CHECK(spec.contains(kEps1));
  CHECK(spec.contains({3, -2}));
  CHECK_FALSE(spec.contains({-1, 0}));
  CHECK_FALSE(spec.contains({0, -1}));
  ConeSeries s(spec, 5);
  CHECK_ERROR_KIND(s.add_term({-1, 0}, QLaurent(1)), ErrorKind::DirectionNotInCone);
}

TEST_CASE("geometric_inverse") {
  ConeSpec spec = ConeSpec::make({kAlpha}, 2);
  ConeSeries s = geometric_inverse(qmonomial(-1), kAlpha, spec, 6);
  for (std::int64_t k = 0; spec.degree(k * kAlpha) <= 6; ++k) CHECK(s.coefficient(k * kAlpha) == qmonomial(-k));
  ConeSeries t = geometric_inverse(QLaurent(1), kEps2, gl2_prime(), 3);
  CHECK(t.terms().size() == 4);
  CHECK(t.coefficient({0, 3}) == QLaurent(1));
  CHECK_ERROR_KIND(geometric_inverse(QLaurent(1), -kAlpha, spec, 3), ErrorKind::DirectionNotInCone);
}

TEST_CASE("series_mul") {
  ConeSpec spec = ConeSpec::make({kAlpha}, 2);
  const std::int64_t n = 6;
  ConeSeries lhs = ConeSeries::from_polynomial(spec, n, LaurentPolynomial::binomial(QLaurent(1), kAlpha));
  ConeSeries prod = series_mul(lhs, geometric_inverse(qmonomial(-1), kAlpha, spec, n));
  CHECK(prod.coefficient(LatticeVector::zero(2)).is_one());
  for (std::int64_t k = 1; spec.degree(k * kAlpha) <= n; ++k)
    CHECK(prod.coefficient(k * kAlpha) == qmonomial(-k) * (QLaurent(1) - qmonomial(1)));
  CHECK(series_equal(series_mul(lhs, ConeSeries::one(spec, n)), lhs));

  ConeSpec big = gl2_prime();
  ConeSeries a(big, 8), b(big, 8);
  a.add_term(kEps1, QLaurent(1));
  b.add_term({1, 1}, QLaurent(1));
  ConeSeries ab = series_mul(a, b);
  CHECK(ab.terms().size() == 1);
  CHECK(ab.coefficient({2, 1}).is_one());

  ConeSpec other = ConeSpec::make({kEps1, kEps2}, 2);
  if (!(other.witness == big.witness)) CHECK_ERROR_KIND(series_mul(ConeSeries(other, 3), a), ErrorKind::IncompatibleSpec);
}

TEST_CASE("coefficient bounds") {
  ConeSpec spec = gl2_prime();
  std::vector<SeriesFactor> den{{QLaurent(1), kEps1}, {QLaurent(1), kEps2}};
  ConeSeries l = expand_product({}, den, spec, 6);
  CHECK(l.coefficient(LatticeVector::zero(2)).is_one());
  CHECK(l.coefficient({-1, 0}).is_zero());
  for (const auto& [k, c] : l.terms()) {
    CHECK(k[0] >= 0);
    CHECK(k[1] >= 0);
    CHECK(c.is_one());
  }
  CHECK_ERROR_KIND(l.coefficient({7, 0}), ErrorKind::OutOfBound);
}

TEST_CASE("expand_product examples") {
  ConeSpec spec = ConeSpec::make({kAlpha}, 2);
  std::vector<SeriesFactor> num{{QLaurent(1), kAlpha}}, den{{qmonomial(-1), kAlpha}};
  ConeSeries basic = expand_product(num, den, spec, 4);
  CHECK(basic.coefficient(LatticeVector::zero(2)).is_one());
  CHECK(basic.coefficient(kAlpha) == qmonomial(-1) - QLaurent(1));
  CHECK(basic.coefficient(2 * kAlpha) == qmonomial(-2) - qmonomial(-1));

  ConeSeries empty = expand_product({}, {}, spec, 4);
  CHECK(empty.terms().size() == 1);
  CHECK(empty.coefficient(LatticeVector::zero(2)).is_one());

  std::vector<SeriesFactor> same{{qmonomial(-1), kAlpha}, {QLaurent(2), 2 * kAlpha}};
  ConeSeries one = expand_product(same, same, spec, 10);
  CHECK(one.terms().size() == 1);
  CHECK(one.coefficient(LatticeVector::zero(2)).is_one());
}

TEST_CASE("restrict_antidominant") {
  ConeSpec spec = gl2_prime();
  ConeSeries s(spec, 4);
  s.add_term(kEps1, QLaurent(1));
  s.add_term(kEps2, QLaurent(1));
  std::vector<LinearFunctional> roots{LinearFunctional::from_integers({1, -1})};
  ConeSeries r = restrict_antidominant(s, roots);
  CHECK(r.terms().size() == 1);
  CHECK(r.coefficient(kEps2).is_one());
  CHECK(restrict_antidominant(r, roots).terms() == r.terms());
}

TEST_CASE("random truncation soundness") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    RandomProduct p = random_product(rng);
    const std::int64_t n = 5;
    ConeSeries got = expand_product(p.num, p.den, p.spec, n);
    Dense want = truncate(brute_product(p.num, p.den, p.xi, p.spec.rank(), n + 5), p.xi, n);
    CHECK(got.terms() == want);

    ConeSeries a = expand_product(p.num, {}, p.spec, n);
    ConeSeries b = expand_product({}, p.den, p.spec, n);
    CHECK(series_mul(a, b).terms() == want);
  }
}

TEST_CASE("semigroup points") {
  std::vector<LatticeVector> gens{kAlpha, kEps2};
  ConeSpec spec = gl2_prime();
  auto pts = semigroup_points(gens, spec.witness, 4);
  for (const auto& p : pts) {
    CHECK(spec.contains(p));
    CHECK(spec.degree(p) <= 4);
  }
  CHECK(std::find(pts.begin(), pts.end(), LatticeVector::zero(2)) != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), kEps1) != pts.end());
}

TEST_CASE("to_table") {
  ConeSpec spec = gl2_prime();
  ConeSeries s(spec, 4);
  s.add_term(kEps2, qmonomial(make_rational(-1, 2)));
  s.add_term(kEps1, QLaurent(3));
  CHECK(s.to_table() == "0,1\tq^-1/2\n1,0\t3\n");
}

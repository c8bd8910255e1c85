#include <doctest.h>

#include <algorithm>
#include <set>

#include "satake/root_weyl.hpp"
#include "test_support.hpp"

using namespace satake;

namespace {

// Closure of the generators under multiplication, with no length bookkeeping.
std::set<IntMatrix> brute_force_closure(const std::vector<ReflectionDatum>& gens, std::size_t rank) {
  std::set<IntMatrix> group{IntMatrix::identity(rank)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntMatrix> current(group.begin(), group.end());
    for (const auto& a : current)
      for (const auto& g : gens) grew |= group.insert(g.matrix() * a).second;
  }
  return group;
}

}  // namespace

TEST_CASE("reflect") {
  RootDatum gl2 = gl_root_datum(2);
  const auto& s = gl2.positive().front();
  CHECK(reflect(s, {1, 0}) == LatticeVector{0, 1});
  CHECK(reflect(s, {1, 1}) == LatticeVector{1, 1});
  RootDatum gl3 = gl_root_datum(3);
  const auto& s1 = gl3.simple().front();
  CHECK(reflect(s1, {1, 0, 0}) == LatticeVector{0, 1, 0});
  for (const auto& r : gl3.positive()) CHECK(reflect(r, reflect(r, {3, -1, 4})) == LatticeVector{3, -1, 4});
  CHECK_ERROR_KIND(ReflectionDatum::make(LinearFunctional::from_integers({1, 0}), {1, 0}), ErrorKind::BadParameters);
}

TEST_CASE("Weyl group orders and lengths") {
  struct Case {
    RootDatum datum;
    std::size_t order;
    int max_length;
  };
  std::vector<Case> cases = {{gl_root_datum(2), 2, 1}, {gl_root_datum(3), 6, 3}, {gl_root_datum(4), 24, 6},
                             {sp4_root_datum(), 8, 4}, {sl2_root_datum(), 2, 1}};
  for (const auto& c : cases) {
    const WeylGroup& w = c.datum.weyl();
    CHECK(w.size() == c.order);
    CHECK(w.elements.front() == IntMatrix::identity(c.datum.rank()));
    CHECK(w.lengths.front() == 0);
    CHECK(*std::max_element(w.lengths.begin(), w.lengths.end()) == c.max_length);
    CHECK(std::is_sorted(w.lengths.begin(), w.lengths.end()));
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& s : c.datum.simple()) {
        IntMatrix sw = s.matrix() * w.elements[i];
        auto it = std::find(w.elements.begin(), w.elements.end(), sw);
        REQUIRE(it != w.elements.end());
        int len = w.lengths[static_cast<std::size_t>(it - w.elements.begin())];
        CHECK(std::abs(len - w.lengths[i]) == 1);
      }
  }
}

TEST_CASE("B2 closure matches brute force") {
  RootDatum b2 = sp4_root_datum();
  auto brute = brute_force_closure(b2.simple(), 2);
  std::set<IntMatrix> enumerated(b2.weyl().elements.begin(), b2.weyl().elements.end());
  CHECK(brute == enumerated);
  CHECK(b2.simple().size() == 2);
}

TEST_CASE("group cap") {
  RootDatum gl4 = gl_root_datum(4);
  CHECK_ERROR_KIND(enumerate_weyl(4, gl4.simple(), 10), ErrorKind::GroupTooLarge);
}

TEST_CASE("antidominance and rho") {
  RootDatum gl2 = gl_root_datum(2);
  CHECK(gl2.is_antidominant({1, 2}));
  CHECK_FALSE(gl2.is_antidominant({2, 1}));
  CHECK(gl2.is_antidominant({0, 0}));
  CHECK(gl_root_datum(4).is_antidominant(LatticeVector::zero(4)));
  CHECK(to_string(gl2.rho_check()) == "1/2,-1/2");
  CHECK(to_string(gl_root_datum(3).rho_check()) == "1,0,-1");
  CHECK(to_string(half_sum_positive_coroots({}, 2)) == "0,0");
}

TEST_CASE("orbit sums are invariant") {
  for (const RootDatum& d : {gl_root_datum(3), sp4_root_datum()}) {
    LatticeVector seed = d.rank() == 3 ? LatticeVector{2, -1, 0} : LatticeVector{3, -1};
    std::multiset<LatticeVector> orbit;
    for (const auto& w : d.weyl().elements) orbit.insert(w.apply(seed));
    for (const auto& u : d.weyl().elements) {
      std::multiset<LatticeVector> moved;
      for (const auto& v : orbit) moved.insert(u.apply(v));
      CHECK(moved == orbit);
    }
  }
}

#include "satake/group_ring.hpp"

#include <algorithm>
#include <limits>

#include "satake/errors.hpp"

namespace satake {

LaurentPolynomial LaurentPolynomial::monomial(const LatticeVector& key, const QLaurent& coeff) {
  LaurentPolynomial p;
  p.add_term(key, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::binomial(const QLaurent& c, const LatticeVector& key) {
  LaurentPolynomial p = monomial(LatticeVector::zero(key.rank()));
  p.add_term(key, -c);
  return p;
}

void LaurentPolynomial::add_term(const LatticeVector& key, const QLaurent& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent LaurentPolynomial::coefficient(const LatticeVector& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QLaurent() : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const QLaurent& c) const {
  LaurentPolynomial r;
  for (const auto& [k, x] : terms_) r.add_term(k, x * c);
  return r;
}

LaurentPolynomial LaurentPolynomial::apply(const IntMatrix& w) const {
  LaurentPolynomial r;
  for (const auto& [k, c] : terms_) r.add_term(w.apply(k), c);
  return r;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
  return r;
}

std::string LaurentPolynomial::to_table() const {
  std::string out;
  for (const auto& [k, c] : terms_) out += to_string(k) + "\t" + c.str() + "\n";
  return out;
}

namespace {

struct TermOrder {
  const LinearFunctional& witness;
  bool operator()(const LatticeVector& a, const LatticeVector& b) const {
    auto da = witness.pair_twice(a), db = witness.pair_twice(b);
    if (da != db) return da < db;
    return a < b;
  }
};

}  // namespace

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& divisor,
                               const LinearFunctional& witness) {
  if (divisor.is_zero()) throw Error(ErrorKind::NotPolynomial, "division by zero");
  if (a.is_zero()) return {};
  const std::size_t rank = divisor.terms().begin()->first.rank();
  TermOrder order{witness};

  std::map<LatticeVector, QLaurent, TermOrder> rem(order);
  for (const auto& [k, c] : a.terms()) rem.emplace(k, c);
  std::vector<std::pair<LatticeVector, QLaurent>> div(divisor.terms().begin(), divisor.terms().end());
  auto lead = std::max_element(div.begin(), div.end(),
                               [&](const auto& x, const auto& y) { return order(x.first, y.first); });
  const LatticeVector lead_key = lead->first;
  const QLaurent lead_inv = lead->second.unit_inverse();

  // Newton polytopes add under multiplication, so every quotient exponent lies
  // in this box; leaving it certifies a nonzero remainder.
  std::vector<std::int64_t> lo(rank, std::numeric_limits<std::int64_t>::max()), hi(rank, std::numeric_limits<std::int64_t>::min());
  std::vector<std::int64_t> dlo = lo, dhi = hi;
  for (const auto& [k, c] : a.terms())
    for (std::size_t i = 0; i < rank; ++i) {
      lo[i] = std::min(lo[i], k[i]);
      hi[i] = std::max(hi[i], k[i]);
    }
  for (const auto& [k, c] : div)
    for (std::size_t i = 0; i < rank; ++i) {
      dlo[i] = std::min(dlo[i], k[i]);
      dhi[i] = std::max(dhi[i], k[i]);
    }

  LaurentPolynomial quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    LatticeVector qkey = top->first - lead_key;
    for (std::size_t i = 0; i < rank; ++i)
      if (qkey[i] < lo[i] - dlo[i] || qkey[i] > hi[i] - dhi[i])
        throw Error(ErrorKind::NotPolynomial, "exact division leaves a remainder");
    QLaurent qcoeff = top->second * lead_inv;
    quotient.add_term(qkey, qcoeff);
    for (const auto& [k, c] : div) {
      LatticeVector key = qkey + k;
      QLaurent delta = -(qcoeff * c);
      auto [it, inserted] = rem.try_emplace(key, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
  }
  return quotient;
}

}  // namespace satake

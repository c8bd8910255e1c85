#include "satake/lattice.hpp"

#include <sstream>

#include "satake/errors.hpp"

namespace satake {

namespace {

void check_rank(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorKind::BadParameters,
                "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

}  // namespace

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t i) {
  LatticeVector v = zero(rank);
  v.coords.at(i) = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  for (auto c : coords)
    if (c != 0) return false;
  return true;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  check_rank(rank(), o.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  check_rank(rank(), o.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

LatticeVector operator*(std::int64_t k, LatticeVector v) {
  for (auto& c : v.coords) c *= k;
  return v;
}

std::string to_string(const LatticeVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(v.coords[i]);
  }
  return out;
}

LatticeVector parse_lattice_vector(std::string_view text) {
  LatticeVector v;
  for (const auto& part : split_commas(text)) {
    Rational r = parse_rational(part);
    if (!is_integer(r)) throw Error(ErrorKind::Parse, "lattice coordinate must be an integer: " + part);
    v.coords.push_back(r.get_num().get_si());
  }
  return v;
}

HalfVector HalfVector::from(const LatticeVector& v) {
  HalfVector h;
  for (auto c : v.coords) h.twice.push_back(2 * c);
  return h;
}

LatticeVector HalfVector::to_lattice() const {
  LatticeVector v;
  for (auto t : twice) {
    if (t % 2 != 0) throw Error(ErrorKind::BadParameters, "vector " + to_string(*this) + " is not integral");
    v.coords.push_back(t / 2);
  }
  return v;
}

std::string to_string(const HalfVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out;
}

LinearFunctional LinearFunctional::from_integers(std::vector<std::int64_t> coeffs) {
  for (auto& c : coeffs) c *= 2;
  return LinearFunctional(std::move(coeffs));
}

LinearFunctional LinearFunctional::from_twice(std::vector<std::int64_t> twice_coeffs) {
  return LinearFunctional(std::move(twice_coeffs));
}

LinearFunctional LinearFunctional::from_rationals(const std::vector<Rational>& coeffs) {
  std::vector<std::int64_t> twice;
  for (const auto& c : coeffs) {
    Rational t = 2 * c;
    if (!is_integer(t))
      throw Error(ErrorKind::BadParameters, "functional coefficient " + to_string(c) + " is not a half-integer");
    twice.push_back(t.get_num().get_si());
  }
  return LinearFunctional(std::move(twice));
}

bool LinearFunctional::is_integral() const {
  for (auto t : twice_)
    if (t % 2 != 0) return false;
  return true;
}

std::int64_t LinearFunctional::pair_twice(const LatticeVector& v) const {
  check_rank(rank(), v.rank());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < twice_.size(); ++i) s += twice_[i] * v.coords[i];
  return s;
}

std::int64_t LinearFunctional::pair_twice(const HalfVector& v) const {
  check_rank(rank(), v.rank());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < twice_.size(); ++i) s += twice_[i] * v.twice[i];
  if (s % 2 != 0) throw Error(ErrorKind::BadParameters, "pairing is a quarter-integer");
  return s / 2;
}

std::int64_t LinearFunctional::pair_integer(const LatticeVector& v) const {
  std::int64_t t = pair_twice(v);
  if (t % 2 != 0)
    throw Error(ErrorKind::BadParameters,
                "pairing <" + to_string(*this) + ", " + to_string(v) + "> is not an integer");
  return t / 2;
}

LinearFunctional LinearFunctional::operator-() const {
  LinearFunctional r = *this;
  for (auto& t : r.twice_) t = -t;
  return r;
}

std::string to_string(const LinearFunctional& f) {
  std::string out;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (i) out += ',';
    out += to_string(f.coeff(i));
  }
  return out;
}

LinearFunctional parse_functional(std::string_view text) {
  std::vector<Rational> coeffs;
  for (const auto& part : split_commas(text)) coeffs.push_back(parse_rational(part));
  return LinearFunctional::from_rationals(coeffs);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

LatticeVector IntMatrix::apply(const LatticeVector& v) const {
  check_rank(n_, v.rank());
  LatticeVector r = LatticeVector::zero(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.coords[i] += at(i, j) * v.coords[j];
  return r;
}

HalfVector IntMatrix::apply(const HalfVector& v) const {
  check_rank(n_, v.rank());
  HalfVector r{std::vector<std::int64_t>(n_, 0)};
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.twice[i] += at(i, j) * v.twice[j];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  check_rank(a.n_, b.n_);
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

}  // namespace satake

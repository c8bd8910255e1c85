#include "satake/qlaurent.hpp"

#include <cctype>
#include <cstdlib>

#include "satake/errors.hpp"

namespace satake {

QLaurent::QLaurent(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

QLaurent QLaurent::v_power(std::int64_t exponent, const Rational& coeff) {
  QLaurent r;
  if (coeff != 0) r.terms_.emplace(exponent, coeff);
  return r;
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void QLaurent::add_term(std::int64_t exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& other) { return *this = *this * other; }

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QLaurent QLaurent::unit_inverse() const {
  if (!is_monomial())
    throw Error(ErrorKind::NotPolynomial, "coefficient " + str() + " is not a unit");
  const auto& [e, c] = *terms_.begin();
  return v_power(-e, Rational(1) / c);
}

QLaurent QLaurent::invert_q() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Rational QLaurent::evaluate_at_v(const Rational& v) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational base = e >= 0 ? v : Rational(1) / v;
    for (std::int64_t i = 0; i < std::llabs(e); ++i) p *= base;
    sum += c * p;
  }
  return sum;
}

namespace {

std::string power_text(std::int64_t v_exponent) {
  std::string p = v_exponent % 2 == 0 ? std::to_string(v_exponent / 2)
                                      : std::to_string(v_exponent) + "/2";
  return p == "1" ? std::string("q") : "q^" + p;
}

std::string term_text(std::int64_t exponent, const Rational& magnitude) {
  if (exponent == 0) return to_string(magnitude);
  if (magnitude == 1) return power_text(exponent);
  return to_string(magnitude) + "*" + power_text(exponent);
}

}  // namespace

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      out += (c < 0 ? "-" : "") + term_text(e, mag);
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + term_text(e, mag);
    }
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string s) : s_(std::move(s)) {}

  QLaurent run() {
    QLaurent result;
    if (s_.empty()) fail("empty expression");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [exponent, coeff] = term();
      result.add_term(exponent, sign * coeff);
    }
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "bad coefficient '" + s_ + "': " + why);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  // unsigned rational: digits [ '/' digits ]
  Rational unsigned_rational() {
    std::string text = digits();
    if (peek() == '/') {
      ++pos_;
      text += "/" + digits();
    }
    return parse_rational(text);
  }

  std::pair<std::int64_t, Rational> term() {
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = unsigned_rational();
      has_coeff = true;
      if (peek() == '*') {
        ++pos_;
      } else {
        return {0, coeff};
      }
    }
    if (peek() != 'q') fail(has_coeff ? "expected 'q' after '*'" : "expected a number or 'q'");
    ++pos_;
    Rational half = 1;
    if (peek() == '^') {
      ++pos_;
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      half = sign * unsigned_rational();
    }
    Rational twice = 2 * half;
    if (!is_integer(twice)) fail("exponent is not a multiple of 1/2");
    return {twice.get_num().get_si(), coeff};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

QLaurent QLaurent::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  return TermParser(std::move(compact)).run();
}

QLaurent qmonomial(const Rational& half_exponent) {
  Rational twice = 2 * half_exponent;
  if (!is_integer(twice))
    throw Error(ErrorKind::BadParameters,
                "q-exponent " + to_string(half_exponent) + " is not a multiple of 1/2");
  return QLaurent::v_power(twice.get_num().get_si());
}

}  // namespace satake

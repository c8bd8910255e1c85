#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace satake {

using Rational = mpq_class;

/// Accepts "3", "-7", "3/2", "-1/2" (surrounding whitespace ignored).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace satake

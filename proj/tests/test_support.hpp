#pragma once

#include <doctest.h>

#include <optional>

#include "satake/errors.hpp"
#include "satake/qlaurent.hpp"

namespace satake::testing {

// Kind of the Error raised by f, or nullopt if f returns normally.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace satake::testing

#define CHECK_ERROR_KIND(expr, kind) CHECK(::satake::testing::error_kind([&] { (void)(expr); }) == (kind))

#pragma once

#include <string>
#include <string_view>

#include "satake/spherical.hpp"

namespace satake {

/// JSON text of a datum: rank, reflections {root, coroot}, theta_plus
/// {theta, sigma, r}, rho_px and cone. Rationals are strings such as "3/2".
std::string datum_to_json(const SphericalDatum& datum);

/// Inverse of datum_to_json. Malformed text raises Error(Parse); a datum that
/// violates an invariant raises Error(BadParameters).
SphericalDatum datum_from_json(std::string_view text);

}  // namespace satake

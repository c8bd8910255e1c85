#include "satake/datum_io.hpp"

#include <json.hpp>

#include "satake/errors.hpp"

namespace satake {

using nlohmann::ordered_json;

namespace {

ordered_json vector_json(const LatticeVector& v) { return ordered_json(v.coords); }

ordered_json functional_json(const LinearFunctional& f) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < f.rank(); ++i) out.push_back(to_string(f.coeff(i)));
  return out;
}

Rational rational_field(const ordered_json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, where + ": expected an integer or a fraction string");
}

LatticeVector vector_field(const ordered_json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array() || j.size() != rank)
    throw Error(ErrorKind::Parse, where + ": expected an array of " + std::to_string(rank) + " integers");
  LatticeVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorKind::Parse, where + ": expected integers");
    v.coords.push_back(x.get<std::int64_t>());
  }
  return v;
}

LinearFunctional functional_field(const ordered_json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array() || j.size() != rank)
    throw Error(ErrorKind::Parse, where + ": expected an array of " + std::to_string(rank) + " entries");
  std::vector<Rational> coeffs;
  for (const auto& x : j) coeffs.push_back(rational_field(x, where));
  return LinearFunctional::from_rationals(coeffs);
}

const ordered_json& member(const ordered_json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, where + ": missing field '" + key + "'");
  return j.at(key);
}

const ordered_json& array_member(const ordered_json& j, const char* key) {
  const auto& a = member(j, key, "datum");
  if (!a.is_array()) throw Error(ErrorKind::Parse, std::string("datum: field '") + key + "' must be an array");
  return a;
}

}  // namespace

std::string datum_to_json(const SphericalDatum& datum) {
  ordered_json j;
  j["rank"] = datum.rank();
  j["reflections"] = ordered_json::array();
  for (const auto& r : datum.roots().positive())
    j["reflections"].push_back({{"root", functional_json(r.root)}, {"coroot", vector_json(r.coroot)}});
  j["theta_plus"] = ordered_json::array();
  for (const auto& t : datum.theta_plus())
    j["theta_plus"].push_back({{"theta", vector_json(t.theta)}, {"sigma", t.sigma}, {"r", to_string(t.r)}});
  j["rho_px"] = functional_json(datum.rho_px());
  j["cone"] = ordered_json::array();
  for (const auto& g : datum.cone_cx()) j["cone"].push_back(vector_json(g));
  return j.dump(2) + "\n";
}

SphericalDatum datum_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("datum file is not valid JSON: ") + e.what());
  }
  const auto& rank_j = member(j, "rank", "datum");
  if (!rank_j.is_number_unsigned() || rank_j.get<std::size_t>() == 0)
    throw Error(ErrorKind::Parse, "datum: rank must be a positive integer");
  const std::size_t rank = rank_j.get<std::size_t>();

  std::vector<ReflectionDatum> positive;
  for (const auto& r : array_member(j, "reflections")) {
    positive.push_back(ReflectionDatum::make(functional_field(member(r, "root", "reflection"), rank, "root"),
                                             vector_field(member(r, "coroot", "reflection"), rank, "coroot")));
  }
  std::vector<ThetaTriple> theta;
  for (const auto& t : array_member(j, "theta_plus")) {
    const auto& sigma = member(t, "sigma", "Theta+ triple");
    if (!sigma.is_number_integer()) throw Error(ErrorKind::Parse, "Theta+ triple: sigma must be +1 or -1");
    theta.push_back({vector_field(member(t, "theta", "Theta+ triple"), rank, "Theta+ theta"),
                     sigma.get<int>(), rational_field(member(t, "r", "Theta+ triple"), "Theta+ r")});
  }
  LinearFunctional rho = functional_field(member(j, "rho_px", "datum"), rank, "rho_P(X)");
  std::vector<LatticeVector> cone;
  for (const auto& g : array_member(j, "cone")) cone.push_back(vector_field(g, rank, "C_X generator"));
  return SphericalDatum(rank, std::move(positive), std::move(theta), std::move(rho), std::move(cone));
}

}  // namespace satake

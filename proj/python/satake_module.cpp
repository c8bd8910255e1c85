#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "satake/cli.hpp"
#include "satake/datum_io.hpp"
#include "satake/errors.hpp"
#include "satake/li_oracle.hpp"
#include "satake/spherical.hpp"

namespace py = pybind11;
using namespace satake;

namespace {

using Coords = std::vector<std::int64_t>;

py::tuple key(const LatticeVector& v) { return py::tuple(py::cast(v.coords)); }

// Polynomials and series cross the boundary as {coordinate tuple: QLaurent}.
py::dict as_dict(const std::map<LatticeVector, QLaurent>& terms) {
  py::dict out;
  for (const auto& [k, c] : terms) out[key(k)] = c;
  return out;
}

LaurentPolynomial from_dict(const py::dict& d) {
  LaurentPolynomial p;
  for (const auto& [k, c] : d) p.add_term(LatticeVector(k.cast<Coords>()), c.cast<QLaurent>());
  return p;
}

}  // namespace

PYBIND11_MODULE(satake, m) {
  m.doc() = "Exact inverse Satake transforms for spherical data";

  static py::exception<Error> satake_error(m, "SatakeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(satake_error)(e.what());
      instance.attr("kind") = std::string(kind_name(e.kind()));
      py::set_error(satake_error, instance);
    }
  });

  py::class_<QLaurent>(m, "QLaurent")
      .def(py::init<long>(), py::arg("constant") = 0)
      .def_static("parse", &QLaurent::parse)
      .def_static("q", [](const std::string& e) { return qmonomial(parse_rational(e)); }, py::arg("exponent"),
                  "q raised to a half-integer, e.g. QLaurent.q('-1/2')")
      .def("invert_q", &QLaurent::invert_q)
      .def("is_zero", &QLaurent::is_zero)
      .def("terms", [](const QLaurent& a) {
        std::map<std::int64_t, std::string> out;
        for (const auto& [e, c] : a.terms()) out.emplace(e, to_string(c));
        return out;
      }, "v-exponent -> rational coefficient as text")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &QLaurent::str)
      .def("__repr__", [](const QLaurent& a) { return "QLaurent('" + a.str() + "')"; });

  py::class_<SphericalDatum>(m, "SphericalDatum")
      .def_property_readonly("rank", &SphericalDatum::rank)
      .def_property_readonly("weyl_order", [](const SphericalDatum& d) { return d.weyl().size(); })
      .def("to_json", &datum_to_json)
      .def_static("from_json", &datum_from_json)
      .def(py::self == py::self);

  m.def("preset", py::overload_cast<std::string_view>(&preset), py::arg("spec"),
        "Datum for 'group:gl2', 'whittaker:gl3', 'sp2n_gl2n:2', ...");

  m.def("macdonald_p", [](const SphericalDatum& d, const Coords& l) { return as_dict(macdonald_p(d, LatticeVector(l)).terms()); },
        py::arg("datum"), py::arg("weight"));

  m.def("basic_asymptotics", [](const SphericalDatum& d, std::int64_t n) { return as_dict(basic_asymptotics(d, n).terms()); },
        py::arg("datum"), py::arg("bound"));

  m.def("lowest_weight_rep", [](const SphericalDatum& d, const Coords& rho) {
    py::dict out;
    for (const auto& [w, mult] : lowest_weight_rep(d.roots(), LatticeVector(rho)).weights) out[key(w)] = mult;
    return out;
  }, py::arg("datum"), py::arg("lowest_weight"));

  m.def("inverse_satake", [](const SphericalDatum& d, const Coords& rho, std::int64_t n) {
    std::vector<std::tuple<Coords, QLaurent, QLaurent>> rows;
    for (const auto& r : inverse_satake_lfun(d, LatticeVector(rho), n).rows)
      rows.emplace_back(r.lambda.coords, r.series_coefficient, r.hecke_value);
    return rows;
  }, py::arg("datum"), py::arg("lowest_weight"), py::arg("bound"),
        "Rows (lambda, series coefficient, Hecke value) on antidominant lambda");

  m.def("pairing", [](const SphericalDatum& d, const py::dict& p, const py::dict& q) {
    return pairing(from_dict(p), from_dict(q), d);
  }, py::arg("datum"), py::arg("p"), py::arg("q"));

  m.def("li_check", [](const SphericalDatum& d, const Coords& rho, std::int64_t n) {
    LiReport r = li_equivalence_check(make_li_datum(d.roots(), LatticeVector(rho)), d, LatticeVector(rho), n);
    return py::dict(py::arg("ok") = r.ok, py::arg("checked") = r.checked, py::arg("report") = r.str());
  }, py::arg("datum"), py::arg("lowest_weight"), py::arg("bound"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"), "Runs a command line in process; returns (status, stdout, stderr).");
}

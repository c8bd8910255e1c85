#include "satake/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "satake/datum_io.hpp"
#include "satake/errors.hpp"
#include "satake/li_oracle.hpp"
#include "satake/rep_chars.hpp"
#include "satake/spherical.hpp"

namespace satake {
namespace {

struct JobConfig {
  std::string preset;
  std::string datum_file;
  std::string rep;
  std::string lowest_weight;
  std::int64_t truncate = -1;  // negative: command default
  std::string format = "tsv";
  std::string out_path;
  std::string lambda;
  std::string suite;
};

bool is_config_error(ErrorKind k) {
  return k == ErrorKind::Parse || k == ErrorKind::UnknownPreset || k == ErrorKind::BadParameters ||
         k == ErrorKind::NotAntidominant;
}

SphericalDatum load_datum(const JobConfig& cfg) {
  if (!cfg.preset.empty() && !cfg.datum_file.empty())
    throw Error(ErrorKind::BadParameters, "give either --preset or --datum-file, not both");
  if (!cfg.preset.empty()) return preset(cfg.preset);
  if (cfg.datum_file.empty()) throw Error(ErrorKind::BadParameters, "one of --preset or --datum-file is required");
  std::ifstream in(cfg.datum_file);
  if (!in) throw Error(ErrorKind::Parse, "cannot read datum file '" + cfg.datum_file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return datum_from_json(buffer.str());
}

// Antidominant element of the W-orbit of the last coordinate vector.
LatticeVector standard_lowest_weight(const SphericalDatum& datum) {
  LatticeVector e = LatticeVector::unit(datum.rank(), datum.rank() - 1);
  for (const auto& w : datum.weyl().elements) {
    LatticeVector v = w.apply(e);
    if (datum.roots().is_antidominant(v)) return v;
  }
  throw Error(ErrorKind::BadParameters, "no antidominant weight in the orbit of " + to_string(e));
}

LatticeVector representation(const SphericalDatum& datum, const JobConfig& cfg) {
  if (!cfg.rep.empty() && !cfg.lowest_weight.empty())
    throw Error(ErrorKind::BadParameters, "give either --rep or --lowest-weight, not both");
  LatticeVector rho;
  if (!cfg.lowest_weight.empty()) {
    rho = parse_lattice_vector(cfg.lowest_weight);
    if (rho.rank() != datum.rank())
      throw Error(ErrorKind::BadParameters, "lowest weight " + to_string(rho) + " has rank " +
                                                std::to_string(rho.rank()) + ", datum has rank " +
                                                std::to_string(datum.rank()));
  } else if (cfg.rep.empty() || cfg.rep == "std") {
    rho = standard_lowest_weight(datum);
  } else if (cfg.rep == "sym2") {
    rho = 2 * standard_lowest_weight(datum);
  } else {
    throw Error(ErrorKind::BadParameters, "unknown representation '" + cfg.rep + "' (expected std or sym2)");
  }
  if (!datum.roots().is_antidominant(rho))
    throw Error(ErrorKind::NotAntidominant,
                "lowest weight " + to_string(rho) + " is not antidominant for the dual root datum");
  return rho;
}

std::int64_t truncation(const JobConfig& cfg, std::int64_t fallback) { return cfg.truncate < 0 ? fallback : cfg.truncate; }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Two-column table of (lattice vector, value) rows.
std::string two_columns(const std::string& key_name, const std::string& value_name,
                        const std::vector<std::pair<LatticeVector, std::string>>& rows, const std::string& format,
                        bool quote_values) {
  std::string out;
  if (format == "tsv") {
    out = key_name + "\t" + value_name + "\n";
    for (const auto& [k, v] : rows) out += to_string(k) + "\t" + v + "\n";
  } else {
    for (const auto& [k, v] : rows)
      out += "{\"" + key_name + "\": [" + to_string(k) + "], \"" + value_name + "\": " + (quote_values ? quoted(v) : v) +
             "}\n";
  }
  return out;
}

std::string series_rows(const std::map<LatticeVector, QLaurent>& terms, const std::string& format) {
  std::vector<std::pair<LatticeVector, std::string>> rows;
  for (const auto& [k, c] : terms) rows.emplace_back(k, c.str());
  return two_columns("lambda", "coefficient", rows, format, true);
}

struct SuiteResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string detail;
};

std::vector<LatticeVector> antidominant_ball(const SphericalDatum& datum, std::int64_t degree) {
  std::vector<LatticeVector> out;
  for (auto& v : lattice_ball(datum.rank(), degree))
    if (datum.roots().is_antidominant(v)) out.push_back(std::move(v));
  return out;
}

SuiteResult suite_orthogonality(const SphericalDatum& datum, std::int64_t degree) {
  SuiteResult r;
  auto weights = antidominant_ball(datum, degree);
  std::vector<SymmetricPolynomial> ps;
  for (const auto& l : weights) ps.push_back(macdonald_p(datum, l));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      ++r.checked;
      QLaurent value = pairing(ps[i], ps[j], datum);
      if (!value.is_zero()) {
        r.ok = false;
        r.detail = "pairing(P_" + to_string(weights[i]) + ", P_" + to_string(weights[j]) + ") = " + value.str();
        return r;
      }
    }
  return r;
}

SuiteResult suite_basic_pairing(const SphericalDatum& datum, std::int64_t degree) {
  SuiteResult r;
  auto weights = lattice_ball(datum.rank(), degree);
  std::int64_t bound = 0;
  for (const auto& l : weights) bound = std::max(bound, datum.cone().degree(l));
  ConeSeries basic = basic_asymptotics(datum, bound);
  SymmetricPolynomial p0 = macdonald_p(datum, LatticeVector::zero(datum.rank()));
  QLaurent norm = pairing(p0, p0, datum);
  for (const auto& l : weights) {
    ++r.checked;
    QLaurent lhs = pairing(macdonald_p(datum, l), p0, datum);
    QLaurent coeff = basic.coefficient(l);
    if (!(lhs == coeff * norm)) {
      r.ok = false;
      r.detail = "lambda " + to_string(l) + ": pairing(P_lambda, P_0) = " + lhs.str() + ", basic coefficient " +
                 coeff.str() + ", pairing(P_0, P_0) = " + norm.str();
      return r;
    }
  }
  return r;
}

SuiteResult suite_whittaker_schur(const SphericalDatum& datum, std::int64_t degree) {
  if (!datum.theta_plus().empty())
    throw Error(ErrorKind::BadParameters, "whittaker-schur requires a datum with empty Theta+");
  SuiteResult r;
  for (const auto& l : antidominant_ball(datum, degree)) {
    ++r.checked;
    if (!(macdonald_p(datum, l) == lowest_weight_rep(datum.roots(), l).character())) {
      r.ok = false;
      r.detail = "lambda " + to_string(l) + ": P_lambda differs from the lowest-weight character";
      return r;
    }
  }
  return r;
}

SuiteResult suite_denominator(const SphericalDatum& datum) {
  SuiteResult r;
  r.checked = 1;
  if (!(weyl_denominator(datum.roots()) == weyl_denominator_product(datum.roots()))) {
    r.ok = false;
    r.detail = "alternating sum and product differ";
  }
  return r;
}

bool is_group_datum(const SphericalDatum& datum) {
  std::vector<ThetaTriple> expected;
  for (const auto& c : datum.roots().coroots()) expected.push_back({c, 1, Rational(1)});
  std::vector<std::int64_t> twice(datum.rank(), 0);
  for (const auto& p : datum.roots().positive())
    for (std::size_t i = 0; i < datum.rank(); ++i) twice[i] += p.root.twice_coeffs()[i] / 2;
  return datum.theta_plus() == expected && datum.rho_px() == LinearFunctional::from_twice(twice);
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
  SphericalDatum datum = load_datum(cfg);
  SuiteResult r;
  if (cfg.suite == "li") {
    if (!is_group_datum(datum)) throw Error(ErrorKind::BadParameters, "the li suite requires a group datum");
    LatticeVector rho = representation(datum, cfg);
    LiReport report = li_equivalence_check(make_li_datum(datum.roots(), rho), datum, rho, truncation(cfg, 8));
    r.ok = report.ok;
    r.checked = report.checked;
    if (report.mismatch)
      r.detail = "mu " + to_string(report.mismatch->mu) + ": li " + report.mismatch->li_value.str() + ", series " +
                 report.mismatch->series_value.str();
  } else if (cfg.suite == "orthogonality") {
    r = suite_orthogonality(datum, truncation(cfg, 4));
  } else if (cfg.suite == "denominator") {
    r = suite_denominator(datum);
  } else if (cfg.suite == "whittaker-schur") {
    r = suite_whittaker_schur(datum, truncation(cfg, 4));
  } else {
    r = suite_basic_pairing(datum, truncation(cfg, 4));
  }
  out << "suite: " << cfg.suite << "\nstatus: " << (r.ok ? "pass" : "fail") << "\nchecked: " << r.checked << "\n";
  if (!r.ok) out << "first failure: " << r.detail << "\n";
  return r.ok ? kExitOk : kExitVerifyFailed;
}

int dispatch(const std::string& command, const JobConfig& cfg, std::ostream& out) {
  if (cfg.truncate < -1) throw Error(ErrorKind::BadParameters, "--truncate must be >= 0");
  if (command == "verify") return cmd_verify(cfg, out);
  SphericalDatum datum = load_datum(cfg);
  if (command == "datum") {
    out << datum_to_json(datum);
  } else if (command == "inverse-satake") {
    LatticeVector rho = representation(datum, cfg);
    HeckeValueTable table = inverse_satake_lfun(datum, rho, truncation(cfg, 10));
    out << (cfg.format == "tsv" ? table.to_tsv() : table.to_records());
  } else if (command == "basic") {
    out << series_rows(basic_asymptotics(datum, truncation(cfg, 10)).terms(), cfg.format);
  } else if (command == "macdonald") {
    LatticeVector lambda = cfg.lambda.empty() ? LatticeVector::zero(datum.rank()) : parse_lattice_vector(cfg.lambda);
    if (lambda.rank() != datum.rank()) throw Error(ErrorKind::BadParameters, "--lambda has the wrong rank");
    out << series_rows(macdonald_p(datum, lambda).terms(), cfg.format);
  } else if (command == "char") {
    WeightMultiset weights = lowest_weight_rep(datum.roots(), representation(datum, cfg));
    std::vector<std::pair<LatticeVector, std::string>> rows;
    for (const auto& [w, m] : weights.weights) rows.emplace_back(w, std::to_string(m));
    out << two_columns("weight", "multiplicity", rows, cfg.format, false);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact inverse Satake transforms for spherical data", "satake"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto add_datum = [&](CLI::App* sub) {
    sub->add_option("--preset", cfg.preset, "group:<gl<n>|sl2|sp4>, whittaker:<...>, sp2n_gl2n:<n>");
    sub->add_option("--datum-file", cfg.datum_file, "JSON datum file");
  };
  auto add_rep = [&](CLI::App* sub) {
    sub->add_option("--rep", cfg.rep, "std or sym2");
    sub->add_option("--lowest-weight", cfg.lowest_weight, "explicit lowest weight, e.g. 0,1");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "tsv or records")->check(CLI::IsMember({"tsv", "records"}));
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
  };

  auto* inv = app.add_subcommand("inverse-satake", "Hecke values of the inverse Satake transform of L(rho)");
  add_datum(inv);
  add_rep(inv);
  inv->add_option("--truncate", cfg.truncate, "witness-degree bound N");
  add_output(inv);

  auto* basic = app.add_subcommand("basic", "Asymptotics of the basic function");
  add_datum(basic);
  basic->add_option("--truncate", cfg.truncate, "witness-degree bound N");
  add_output(basic);

  auto* mac = app.add_subcommand("macdonald", "The symmetric polynomial P_lambda");
  add_datum(mac);
  mac->add_option("--lambda", cfg.lambda, "coweight, e.g. 0,1");
  add_output(mac);

  auto* chr = app.add_subcommand("char", "Weights of the lowest-weight representation");
  add_datum(chr);
  add_rep(chr);
  add_output(chr);

  auto* ver = app.add_subcommand("verify", "Run an exact property suite");
  add_datum(ver);
  add_rep(ver);
  ver->add_option("--suite", cfg.suite, "property suite")
      ->required()
      ->check(CLI::IsMember({"li", "orthogonality", "denominator", "whittaker-schur", "basic-pairing"}));
  ver->add_option("--truncate", cfg.truncate, "N for li, degree for the other suites");
  ver->add_option("--out", cfg.out_path, "output file (default stdout)");

  auto* dat = app.add_subcommand("datum", "Emit the datum as JSON");
  add_datum(dat);
  dat->add_option("--out", cfg.out_path, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::ostringstream buffer;
  int status = kExitOk;
  try {
    status = dispatch(command, cfg, buffer);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_config_error(e.kind()) ? kExitConfig : kExitMath;
  }
  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kExitConfig;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace satake

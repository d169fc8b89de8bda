#include "bqdirac/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bqdirac/circle_spaces.hpp"
#include "bqdirac/errors.hpp"
#include "bqdirac/qed_decomposition.hpp"
#include "bqdirac/report.hpp"
#include "bqdirac/spectrum.hpp"
#include "bqdirac/verify.hpp"

namespace bqdirac {

namespace {

struct RunConfig {
  double alpha = 7.2973525693e-3;
  double mass_ev = 510998.9461;
  double tol = 1e-12;
  std::uint64_t seed = 42;
  std::string format = "csv";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_config(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha, "fine-structure constant, in (0, 1)")->capture_default_str();
  cmd->add_option("--mass-ev", cfg.mass_ev, "electron rest energy in eV")->capture_default_str();
  cmd->add_option("--tol", cfg.tol, "pass tolerance")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void validate(const RunConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
  if (!(cfg.mass_ev > 0.0) || !std::isfinite(cfg.mass_ev)) throw UsageError("--mass-ev must be positive");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
}

int cmd_spectrum(const RunConfig& cfg, int max_n_theta, int max_n_r, std::ostream& out) {
  validate(cfg);
  const auto lines = spectrum_table(cfg.alpha, cfg.mass_ev, max_n_theta, max_n_r);
  out << (cfg.format == "json" ? to_json(lines) : to_csv(lines));
  for (const auto& l : lines) {
    if (!(l.abs_diff <= cfg.tol * cfg.mass_ev)) return kExitVerificationFailure;
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite_name, std::ostream& out) {
  validate(cfg);
  Suite suite{};
  try {
    suite = parse_suite(suite_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerificationReport report = run_suite(suite, cfg.seed);
  out << (cfg.format == "json" ? to_json(report) : to_csv(report));
  return report.overall() ? kExitPass : kExitVerificationFailure;
}

int cmd_verify_dirac(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  const auto cases = dirac_cases(cfg.seed);
  out << to_json(cases);
  for (const auto& c : cases) {
    if (!c.pass) return kExitVerificationFailure;
  }
  return kExitPass;
}

int cmd_verify_tachyon(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  const auto ids = tachyon_identities(cfg.seed);
  out << to_json(ids);
  for (const auto& t : ids) {
    if (!t.pass) return kExitVerificationFailure;
  }
  return kExitPass;
}

struct MapArgs {
  std::string from = "L";
  std::string space;
  std::optional<double> R0;
  std::optional<double> R1;
  std::vector<double> point;
  std::string input;
  bool round_trip = false;
};

SpaceChart make_chart(const std::string& name, const MapArgs& a) {
  const ChartKind kind = parse_chart_kind(name);
  const bool temporal = kind == ChartKind::T || kind == ChartKind::S;
  const bool spatial = kind == ChartKind::M || kind == ChartKind::S;
  return SpaceChart::create(kind, temporal ? a.R0 : std::nullopt, spatial ? a.R1 : std::nullopt);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open --input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cmd_map(const RunConfig& cfg, const MapArgs& a, std::ostream& out) {
  validate(cfg);
  ChartPoint source{SpaceChart::minkowski(), {}};
  if (!a.input.empty()) {
    if (!a.point.empty()) throw UsageError("give either --point or --input, not both");
    source = chart_point_from_json(read_input(a.input));
  } else {
    if (a.point.size() != 4) throw UsageError("--point needs exactly four coordinates");
    source = {make_chart(a.from, a), {a.point[0], a.point[1], a.point[2], a.point[3]}};
  }
  const SpaceChart target = make_chart(a.space, a);
  const ChartPoint mapped{target, chart_map(source.coords, source.chart, target)};
  if (!a.round_trip) {
    out << to_json(mapped) << '\n';
    return kExitPass;
  }
  const ChartPoint back{source.chart, chart_map(mapped.coords, target, source.chart)};
  double err = 0.0;
  for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(back.coords[k] - source.coords[k]));
  auto strip = [](std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
  };
  out << "{\"forward\":" << strip(to_json(mapped)) << ",\"back\":" << strip(to_json(back))
      << ",\"max_error\":" << json_number(err) << "}\n";
  return err <= cfg.tol ? kExitPass : kExitVerificationFailure;
}

struct RhoArgs {
  double A = 1.0;
  double mass = 1.0;
  double e = 1.0;
  int n_theta = 1;
  int n_r = 0;
  std::string branch = "both";
};

int cmd_qed_rho(const RunConfig& cfg, const RhoArgs& a, std::ostream& out) {
  validate(cfg);
  if (!(a.mass >= 0.0)) throw UsageError("--mass must be non-negative");
  const double dp = coefficient_d_prime({a.n_theta, a.n_r}, cfg.alpha);
  const ChargeDensitySolution s = solve_rho(a.A, a.mass, a.e, dp);
  if (cfg.format == "json") {
    out << to_json(s, a.mass, a.e, dp);
  } else {
    out << "A,mass,e,d_prime,rho_plus,rho_minus,residual_plus,residual_minus\n"
        << format_number(s.A) << ',' << format_number(a.mass) << ',' << format_number(a.e) << ','
        << format_number(dp) << ',' << format_number(s.rho_plus) << ',' << format_number(s.rho_minus) << ','
        << format_number(s.residual_plus) << ',' << format_number(s.residual_minus) << '\n';
  }
  const bool plus_ok = s.residual_plus <= cfg.tol;
  const bool minus_ok = s.residual_minus <= cfg.tol;
  const bool ok = a.branch == "plus" ? plus_ok : a.branch == "minus" ? minus_ok : plus_ok && minus_ok;
  return ok ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biquaternion Dirac system: spectra, chart maps and verification suites", "bqdirac"};
  app.require_subcommand(1);

  RunConfig cfg;

  int max_n_theta = 3;
  int max_n_r = 3;
  auto* spectrum = app.add_subcommand("spectrum", "energy levels of the coupled interaction");
  add_config(spectrum, cfg);
  spectrum->add_option("--max-ntheta", max_n_theta, "largest n_theta")->capture_default_str();
  spectrum->add_option("--max-nr", max_n_r, "largest n_r")->capture_default_str();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  add_config(verify, cfg);
  verify->add_option("--suite", suite, "algebra, charts, dirac, tachyon, spectrum, qed or all")
      ->capture_default_str();

  auto* verify_dirac = app.add_subcommand("verify-dirac", "plane-wave residuals as JSON");
  add_config(verify_dirac, cfg);
  auto* verify_tachyon = app.add_subcommand("verify-tachyon", "tachyonic identities as JSON");
  add_config(verify_tachyon, cfg);

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "map a point between charts L, M, T, S");
  add_config(map, cfg);
  map->add_option("--from", map_args.from, "source chart")->capture_default_str();
  map->add_option("--space", map_args.space, "target chart")->required();
  map->add_option("--R0", map_args.R0, "temporal circle radius");
  map->add_option("--R1", map_args.R1, "spatial circle radius");
  map->add_option("--point", map_args.point, "four coordinates in the source chart")->delimiter(',')->expected(4);
  map->add_option("--input", map_args.input, "JSON chart point file, or - for stdin");
  map->add_flag("--round-trip", map_args.round_trip, "map back and report the error");

  RhoArgs rho;
  auto* qed = app.add_subcommand("qed-rho", "charge density from the local potential");
  add_config(qed, cfg);
  qed->add_option("--A", rho.A, "potential")->capture_default_str();
  qed->add_option("--mass", rho.mass, "rest mass")->capture_default_str();
  qed->add_option("--e", rho.e, "charge")->capture_default_str();
  qed->add_option("--ntheta", rho.n_theta, "n_theta")->capture_default_str();
  qed->add_option("--nr", rho.n_r, "n_r")->capture_default_str();
  qed->add_option("--branch", rho.branch, "which root must satisfy --tol")
      ->check(CLI::IsMember({"plus", "minus", "both"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg, max_n_theta, max_n_r, out);
    if (*verify) return cmd_verify(cfg, suite, out);
    if (*verify_dirac) return cmd_verify_dirac(cfg, out);
    if (*verify_tachyon) return cmd_verify_tachyon(cfg, out);
    if (*map) return cmd_map(cfg, map_args, out);
    if (*qed) return cmd_qed_rho(cfg, rho, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::LightConePoint) {
      err << "points with x3^2 <= x0^2 lie on or inside the light cone and have no temporal polar form\n";
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Malformed --input records surface here as JSON library exceptions.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bqdirac

// vesicle: command-line driver for the two-walk vesicle model.
//
//   vesicle zn --n 6 [--c 2 --s 1 --q 0.5]
//   vesicle series-check --order 12
//   vesicle singularity --c 2 --s 1 --q 1 [--t 0.1]
//   vesicle sweep --c 1:3:41 --s 0.05:1:20 --q 1 --out surface.csv
//   vesicle scaling tp_cs | M_q | A_q | M_c | A_c | table_exponents --phase critical
//
// Every run writes one JSON report line to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vesicle/enumerate.hpp"
#include "vesicle/errors.hpp"
#include "vesicle/phase.hpp"
#include "vesicle/qseries.hpp"
#include "vesicle/scaling.hpp"
#include "vesicle/sweep.hpp"
#include "vesicle/version.hpp"

using nlohmann::ordered_json;
using namespace vesicle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Outcome {
  int code = kExitOk;
  std::string summary = "ok";
};

ordered_json num_or_null(std::optional<double> v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

// ---- zn -------------------------------------------------------------------

struct ZnArgs {
  int n = 0;
  std::optional<double> c, s, q;
};

Outcome run_zn(const ZnArgs& a, ordered_json& params) {
  params["n"] = a.n;
  const bool numeric = a.c || a.s || a.q;
  if (!numeric) {
    LaurentPoly3 z;
    if (a.n <= kMaxEnumerationLength) {
      z = brute_force_partition(a.n);
    } else {
      if (a.n > kMaxSeriesOrder) throw BoundsError("zn: n must be <= " + std::to_string(kMaxSeriesOrder));
      z = length_series(a.n).coefficients[static_cast<std::size_t>(a.n)];
    }
    ordered_json out;
    out["n"] = a.n;
    out["source"] = a.n <= kMaxEnumerationLength ? "enumeration" : "series";
    out["polynomial"] = to_json(z);
    std::cout << out.dump() << '\n';
    return {};
  }

  const ModelPoint p{a.c.value_or(1.0), a.s.value_or(1.0), a.q.value_or(1.0), std::nullopt};
  params["c"] = p.c;
  params["s"] = p.s;
  params["q"] = p.q;
  ordered_json out;
  out["n"] = a.n;
  out["c"] = p.c;
  out["s"] = p.s;
  out["q"] = p.q;
  try {
    out["value"] = static_cast<double>(transfer_partition(a.n, p));
  } catch (const OverflowError&) {
    out["value"] = nullptr;
  }
  out["log_value"] = static_cast<double>(log_transfer_partition(a.n, p));
  Outcome result;
  if (a.n <= 12) {
    const long double exact = brute_force_partition(a.n).evaluate(p.c, p.s, p.q);
    const long double dp = transfer_partition(a.n, p);
    const bool ok = std::abs(dp - exact) <= 1e-12L * std::abs(exact);
    out["oracle_check"] = ok;
    if (!ok) result = {kExitFail, "transfer matrix disagrees with enumeration"};
  }
  std::cout << out.dump() << '\n';
  return result;
}

// ---- series-check ----------------------------------------------------------

struct SeriesCheckArgs {
  int order = 12;
  std::optional<int> corrupt;
};

std::string first_difference(const LaurentPoly3& got, const LaurentPoly3& want) {
  std::map<Monomial, std::pair<BigInt, BigInt>> all;
  for (const auto& [m, v] : got.terms()) all[m].first = v;
  for (const auto& [m, v] : want.terms()) all[m].second = v;
  for (const auto& [m, vals] : all) {
    if (vals.first != vals.second) {
      std::ostringstream os;
      os << "c^" << m.c << "*s^" << m.s << "*q^" << m.q << ": series " << vals.first << ", enumeration "
         << vals.second;
      return os.str();
    }
  }
  return "";
}

Outcome run_series_check(const SeriesCheckArgs& a, ordered_json& params) {
  params["order"] = a.order;
  if (a.order < 0 || a.order > kMaxEnumerationLength) {
    throw BoundsError("series-check: order must be in [0, " + std::to_string(kMaxEnumerationLength) + "]");
  }
  SeriesInT series = length_series(a.order);
  if (a.corrupt) {
    params["corrupt"] = *a.corrupt;
    if (*a.corrupt < 0 || *a.corrupt > a.order) throw BoundsError("--corrupt must name a coefficient 0..order");
    series.coefficients[static_cast<std::size_t>(*a.corrupt)].add_term({0, 0, 0}, 1);
  }
  int failures = 0;
  std::optional<int> first_bad;
  for (int n = 0; n <= a.order; ++n) {
    const LaurentPoly3 want = brute_force_partition(n);
    const LaurentPoly3& got = series.coefficients[static_cast<std::size_t>(n)];
    if (got == want) {
      std::cout << "n=" << n << " PASS\n";
    } else {
      ++failures;
      if (!first_bad) first_bad = n;
      std::cout << "n=" << n << " FAIL " << first_difference(got, want) << '\n';
    }
  }
  if (failures) return {kExitFail, "series differs from enumeration first at n=" + std::to_string(*first_bad)};
  return {kExitOk, "all " + std::to_string(a.order + 1) + " coefficients exact"};
}

// ---- singularity -----------------------------------------------------------

struct PointArgs {
  double c = 1.0, s = 1.0, q = 1.0;
  std::optional<double> t;
  std::optional<int> depth;
  std::optional<double> tol;
};

Outcome run_singularity(const PointArgs& a, ordered_json& params) {
  params["c"] = a.c;
  params["s"] = a.s;
  params["q"] = a.q;
  RootOptions ropt;
  if (a.tol) {
    if (!(*a.tol > 0.0)) throw DomainError("--tol must be positive");
    ropt.abs_tol = *a.tol;
    params["tol"] = *a.tol;
  }
  const SingularityResult r = classify(a.c, a.s, a.q, ropt);
  const Densities d = densities(a.c, a.s, a.q, ropt);
  ordered_json out;
  out["c"] = a.c;
  out["s"] = a.s;
  out["q"] = a.q;
  out["t_c"] = r.t_c;
  out["kind"] = to_string(r.kind);
  out["phase"] = to_string(r.phase);
  out["contacts"] = d.contacts;
  out["area"] = num_or_null(d.area);
  if (a.q <= 1.0) {
    out["t_r"] = branch_point(a.s);
    out["c_s"] = binding_threshold(a.s);
  }
  if (a.t) {
    params["t"] = *a.t;
    ordered_json g;
    g["t"] = *a.t;
    try {
      if (a.depth) {
        params["depth"] = *a.depth;
        g["G"] = vesicle_gf_cfrac(a.c, to_xy(*a.t, a.s, a.q), *a.depth);
        g["depth"] = *a.depth;
      } else {
        g["G"] = length_gf({a.c, a.s, a.q, *a.t});
      }
    } catch (const SingularityError& e) {
      g["G"] = nullptr;
      g["error"] = e.what();
    }
    out["generating_function"] = g;
  }
  std::cout << out.dump(2) << '\n';
  return {};
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string c = "1", s = "1", q = "1";
  std::string format = "csv";
  std::string out;
  unsigned jobs = 0;
};

Outcome run_sweep_cmd(const SweepArgs& a, ordered_json& params) {
  params["c"] = a.c;
  params["s"] = a.s;
  params["q"] = a.q;
  params["format"] = a.format;
  SweepSpec spec;
  spec.jobs = a.jobs;
  auto take = [&](Parameter p, const std::string& text, double& fixed) {
    if (text.find(':') != std::string::npos) {
      spec.axes.push_back(parse_axis(p, text));
    } else {
      try {
        std::size_t used = 0;
        fixed = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
      } catch (const std::logic_error&) {
        throw DomainError("--" + std::string(to_string(p)) + ": expected a number or min:max:count[:log]");
      }
    }
  };
  take(Parameter::C, a.c, spec.c);
  take(Parameter::S, a.s, spec.s);
  take(Parameter::Q, a.q, spec.q);
  spec.format = a.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (a.format != "json" && a.format != "csv") throw DomainError("--format must be csv or json");

  const std::vector<SweepRow> rows = run_sweep(spec);
  std::ofstream file;
  if (!a.out.empty()) {
    params["out"] = a.out;
    file.open(a.out, std::ios::binary);
    if (!file) throw DomainError("cannot open " + a.out + " for writing");
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  if (spec.format == OutputFormat::Json) {
    write_json(os, rows);
  } else {
    write_csv(os, rows);
  }
  std::size_t failed = 0;
  for (const SweepRow& r : rows) failed += !r.error.empty();
  std::ostringstream summary;
  summary << rows.size() << " points, " << failed << " failed";
  if (failed == rows.size()) return {kExitFail, summary.str()};
  return {kExitOk, summary.str()};
}

// ---- scaling ---------------------------------------------------------------

struct ScalingArgs {
  std::string which;
  std::string phase = "critical";
  double min = 1e-6, max = 1e-3;
  int count = 10;
  std::optional<int> n;
};

ordered_json fit_json(const ScalingFit& f) {
  ordered_json j;
  j["exponent"] = f.exponent;
  j["amplitude"] = f.amplitude;
  j["extrapolated_exponent"] = f.extrapolated_exponent;
  j["extrapolated_amplitude"] = f.extrapolated_amplitude;
  j["window"] = {f.window_min, f.window_max};
  j["max_residual"] = f.max_residual;
  return j;
}

bool within_abs(double v, double want, double tol) { return std::abs(v - want) <= tol; }
bool within_rel(double v, double want, double tol) { return std::abs(v - want) <= tol * std::abs(want); }

struct TableRow {
  double c, q;
  double contacts, area;  // expected exponents
  int n_max;
  bool gate_contacts;
};

const std::map<std::string, TableRow>& exponent_table() {
  static const std::map<std::string, TableRow> table = {
      {"unbound", {1.0, 1.0, 0.0, 1.5, 1000, true}},
      {"critical", {4.0 / 3.0, 1.0, 0.5, 1.5, 1000, true}},
      {"bound", {2.0, 1.0, 1.0, 1.0, 1000, true}},
      {"deflated", {1.0, 0.9, 1.0, 1.0, 1000, true}},
      // only the n^2 area growth is checked at q > 1 (small n)
      {"inflated", {1.0, 1.05, 0.0, 2.0, 60, false}},
  };
  return table;
}

Outcome run_scaling(const ScalingArgs& a, ordered_json& params) {
  params["which"] = a.which;
  ordered_json out;
  out["which"] = a.which;
  bool pass = true;

  if (a.which == "table_exponents") {
    params["phase"] = a.phase;
    const auto it = exponent_table().find(a.phase);
    if (it == exponent_table().end()) throw DomainError("--phase must be unbound, critical, bound, deflated or inflated");
    const TableRow& row = it->second;
    const int n_max = a.n.value_or(row.n_max);
    params["n"] = n_max;
    const std::vector<int> grid = length_grid(std::max(2, n_max / 8), n_max, 10);
    const ModelPoint p{row.c, 1.0, row.q, std::nullopt};
    const ScalingFit m = finite_size_exponent(Observable::Contacts, p, grid);
    const ScalingFit ar = finite_size_exponent(Observable::Area, p, grid);
    const bool m_ok = !row.gate_contacts || within_abs(m.extrapolated_exponent, row.contacts, 0.1);
    const bool a_ok = within_abs(ar.extrapolated_exponent, row.area, 0.1);
    pass = m_ok && a_ok;
    out["phase"] = a.phase;
    out["c"] = row.c;
    out["q"] = row.q;
    out["n_grid"] = grid;
    out["contacts"] = fit_json(m);
    out["contacts"]["expected_exponent"] = row.contacts;
    out["contacts"]["checked"] = row.gate_contacts;
    out["area"] = fit_json(ar);
    out["area"]["expected_exponent"] = row.area;
    out["tolerance"] = 0.1;
  } else {
    params["min"] = a.min;
    params["max"] = a.max;
    params["count"] = a.count;
    if (a.count < 5) throw DomainError("--count must be >= 5");
    if (!(a.min > 0.0) || !(a.max > a.min)) throw DomainError("window needs 0 < min < max");
    const std::vector<double> window = geometric_grid(a.min, a.max, a.count);
    ScalingFit fit;
    double want_exp = 0, want_amp = 0, exp_tol = 0.01, amp_tol = 0.02;
    if (a.which == "tp_cs") {
      fit = pole_scaling_at_threshold(window);
      want_exp = 2.0 / 3.0;
      want_amp = 0.160449;
    } else {
      static const std::map<std::string, std::pair<CrossoverLaw, double>> laws = {
          {"M_q", {CrossoverLaw::ContactsVsQ, 1.1686}},
          {"A_q", {CrossoverLaw::AreaVsQ, 0.42789}},
          {"M_c", {CrossoverLaw::ContactsVsC, 3.375}},
          {"A_c", {CrossoverLaw::AreaVsC, 4.0 / 9.0}},
      };
      const auto it = laws.find(a.which);
      if (it == laws.end()) throw DomainError("unknown scaling law '" + a.which + "'");
      const CrossoverLaw law = it->second.first;
      fit = crossover_scaling(law, window);
      want_exp = crossover_exponent(law);
      want_amp = it->second.second;
      if (law == CrossoverLaw::ContactsVsC || law == CrossoverLaw::AreaVsC) amp_tol = 0.01;
      out["model_amplitude"] = crossover_amplitude(law);
    }
    out["fit"] = fit_json(fit);
    out["expected_exponent"] = want_exp;
    out["expected_amplitude"] = want_amp;
    out["exponent_tolerance"] = exp_tol;
    out["amplitude_tolerance_rel"] = amp_tol;
    pass = within_abs(fit.exponent, want_exp, exp_tol) && within_rel(fit.extrapolated_amplitude, want_amp, amp_tol);
  }
  out["verdict"] = pass ? "PASS" : "FAIL";
  std::cout << out.dump(2) << '\n';
  return pass ? Outcome{} : Outcome{kExitFail, a.which + " outside tolerance"};
}

void report(const std::string& command, const ordered_json& params, double seconds, const Outcome& outcome) {
  ordered_json r;
  r["command"] = command;
  r["parameters"] = params;
  r["version"] = version();
  r["wall_time_s"] = seconds;
  r["exit_code"] = outcome.code;
  r["outcome"] = outcome.summary;
  std::cerr << r.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solution toolkit for two friendly directed walks with contact, pull and area fugacities"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  ZnArgs zn;
  auto* zn_cmd = app.add_subcommand("zn", "Partition function Z_n: exact polynomial, or its value at a point");
  zn_cmd->add_option("--n", zn.n, "Walk length")->required()->check(CLI::NonNegativeNumber);
  zn_cmd->add_option("--c", zn.c, "Contact fugacity");
  zn_cmd->add_option("--s", zn.s, "Pull fugacity");
  zn_cmd->add_option("--q", zn.q, "Area fugacity");

  SeriesCheckArgs sc;
  auto* sc_cmd = app.add_subcommand("series-check", "Compare the generating-function series with enumeration");
  sc_cmd->add_option("--order", sc.order, "Highest power of t (<= 16)");
  sc_cmd->add_option("--corrupt", sc.corrupt, "Test mode: perturb the series coefficient of t^N");

  PointArgs pt;
  auto* sg_cmd = app.add_subcommand("singularity", "Dominant singularity, phase and densities at (c, s, q)");
  sg_cmd->add_option("--c", pt.c, "Contact fugacity");
  sg_cmd->add_option("--s", pt.s, "Pull fugacity");
  sg_cmd->add_option("--q", pt.q, "Area fugacity");
  sg_cmd->add_option("--t", pt.t, "Also evaluate G(c, s, q, t)");
  sg_cmd->add_option("--depth", pt.depth, "Evaluate G from the continued fraction at this depth");
  sg_cmd->add_option("--tol", pt.tol, "Bisection tolerance in t (default 1e-13)");

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Phase-diagram sweep over one or two of c, s, q");
  sw_cmd->add_option("--c", sw.c, "Value or axis min:max:count[:log]");
  sw_cmd->add_option("--s", sw.s, "Value or axis min:max:count[:log]");
  sw_cmd->add_option("--q", sw.q, "Value or axis min:max:count[:log]");
  sw_cmd->add_option("--format", sw.format, "csv or json");
  sw_cmd->add_option("--out", sw.out, "Output file (default stdout)");
  sw_cmd->add_option("--jobs", sw.jobs, "Worker threads (default: all cores)");

  ScalingArgs sa;
  auto* sa_cmd = app.add_subcommand("scaling", "Scaling-law fits near (c, q) = (4/3, 1) and the finite-size table");
  sa_cmd->add_option("which", sa.which, "tp_cs, M_q, A_q, M_c, A_c or table_exponents")->required();
  sa_cmd->add_option("--phase", sa.phase, "Table row for table_exponents");
  sa_cmd->add_option("--min", sa.min, "Smallest eps (or c - c_s)");
  sa_cmd->add_option("--max", sa.max, "Largest eps (or c - c_s)");
  sa_cmd->add_option("--count", sa.count, "Number of geometric window points");
  sa_cmd->add_option("--n", sa.n, "Largest length for table_exponents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  ordered_json params = ordered_json::object();
  Outcome outcome;
  try {
    if (command == "zn") outcome = run_zn(zn, params);
    else if (command == "series-check") outcome = run_series_check(sc, params);
    else if (command == "singularity") outcome = run_singularity(pt, params);
    else if (command == "sweep") outcome = run_sweep_cmd(sw, params);
    else outcome = run_scaling(sa, params);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    outcome = {kExitUsage, e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(command, params, seconds, outcome);
  return outcome.code;
}

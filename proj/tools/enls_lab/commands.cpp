#include "enls_lab/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "enls/bounds.hpp"
#include "enls/energy.hpp"
#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/field_io.hpp"
#include "enls/gauge.hpp"
#include "enls/initial_data.hpp"
#include "enls/norms.hpp"
#include "enls/parallel.hpp"
#include "enls/planner.hpp"
#include "enls/solver.hpp"
#include "enls_lab/config.hpp"
#include "enls_lab/report.hpp"

namespace enls::lab {

namespace {

/// Thrown after parameter resolution when only the resolved configuration is wanted.
struct DryRunStop {};

struct Context {
  Config cfg;
  std::filesystem::path out;
  std::uint64_t seed = 1;
  bool deterministic = false;
  bool dry_run = false;
  Summary summary;

  void resolved() const {
    if (dry_run) throw DryRunStop{};
  }

  void write(const std::string& name, const std::string& contents) {
    write_file_atomic(out / name, contents);
    summary.output(name);
  }
};

GridSpec read_grid(const Config& c) {
  const double length = c.number("grid", "length");
  const long modes = c.integer("grid", "modes");
  return GridSpec(length, static_cast<int>(modes));
}

Equation read_equation(const Config& c) {
  Equation eq;
  const std::string form = c.text("equation", "form", "reduced");
  if (form == "reduced") {
    eq.form = EquationForm::kReduced;
  } else if (form == "full") {
    eq.form = EquationForm::kFull;
  } else {
    throw ConfigError(c.origin() + ": field [equation] form: expected 'full' or 'reduced', got '" +
                      form + "'");
  }
  eq.alpha = c.number("equation", "alpha", 0.0);
  eq.beta = c.number("equation", "beta", 1.0);
  return eq;
}

SolverConfig read_solver(const Config& c, const Equation& eq, bool need_t_end = true) {
  SolverConfig s;
  s.equation = eq;
  s.dt = c.number("solver", "dt");
  if (need_t_end) s.t_end = c.number("solver", "t_end");
  s.dealias = c.boolean("solver", "dealias", true);
  s.snapshot_stride = static_cast<int>(c.integer("solver", "snapshot_stride", 1));
  s.time_direction = static_cast<int>(c.integer("solver", "time_direction", 1));
  s.blowup_threshold = c.number("solver", "blowup_threshold", 1e8);
  return s;
}

MultiplierParams read_multiplier(const Config& c) {
  return MultiplierParams(c.number("multiplier", "N"), c.number("multiplier", "s"));
}

FieldSample read_initial(const Config& c, const GridSpec& g, std::uint64_t seed) {
  const std::string kind = c.text("data", "kind", "gaussian");
  if (kind == "gaussian") {
    return gaussian_bump(g, c.number("data", "amplitude", 1.0), c.number("data", "width", 4.0),
                         static_cast<int>(c.integer("data", "carrier_mode", 0)));
  }
  if (kind == "mode") {
    const int k = static_cast<int>(c.integer("data", "mode"));
    if (!g.contains_mode(k)) throw ConfigError(c.origin() + ": field [data] mode: off the grid");
    Spectrum s(g);
    s[k] = c.number("data", "amplitude", 1.0);
    return to_field(s);
  }
  if (kind == "packet") {
    return to_field(wave_packet(g, static_cast<int>(c.integer("data", "center_mode")),
                                c.number("data", "width_modes"),
                                static_cast<int>(c.integer("data", "lo")),
                                static_cast<int>(c.integer("data", "hi")), seed,
                                c.number("data", "l2", 1.0)));
  }
  if (kind == "random") {
    return to_field(random_band_limited(g, static_cast<int>(c.integer("data", "band")), seed,
                                        c.number("data", "l2", 1.0)));
  }
  if (kind == "split") {
    return to_field(split_band_data(g, static_cast<int>(c.integer("data", "low_hi", 1)),
                                    static_cast<int>(c.integer("data", "hi")),
                                    c.number("data", "low_share", 0.5), seed,
                                    c.number("data", "l2", 1.0),
                                    c.boolean("data", "two_sided", false)));
  }
  throw ConfigError(c.origin() + ": field [data] kind: unknown initial data '" + kind +
                    "' (gaussian, mode, packet, random, split)");
}

double relative_l2_drift(const Trajectory& t) {
  double worst = 0.0;
  for (double n : t.l2_norms) worst = std::max(worst, std::abs(n - t.l2_norms.front()));
  return worst / t.l2_norms.front();
}

/// Exact value of a decimal or p/q literal.
Rational parse_rational(const std::string& text, const Config& c, const char* section,
                        const char* key) {
  const auto bad = [&] {
    throw ConfigError(c.origin() + ": field [" + section + "] " + key + ": cannot parse '" + text +
                      "' as a rational");
  };
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos) bad();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits = negative || (!whole.empty() && whole[0] == '+') ? whole.substr(1) : whole;
    const std::int64_t w = digits.empty() ? 0 : std::stoll(digits);
    const std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    const std::int64_t num = w * den + f;
    return Rational(negative ? -num : num, den);
  } catch (const std::logic_error&) {
    bad();
  }
  return {};
}

void cmd_simulate(Context& ctx) {
  const Config& c = ctx.cfg;
  const GridSpec g = read_grid(c);
  const SolverConfig sc = read_solver(c, read_equation(c));
  const FieldSample u0 = read_initial(c, g, ctx.seed);
  const double tol = c.number("check", "l2_drift", 1e-8);
  ctx.resolved();

  const Trajectory traj = solve(u0, sc);
  write_trajectory(ctx.out / "trajectory", traj);
  ctx.summary.output("trajectory/manifest.csv");

  auto& m = ctx.summary.metrics();
  m["snapshots"] = traj.snapshots.size();
  m["final_time"] = traj.snapshots.back().time;
  m["boundary_amplitude"] = boundary_amplitude(traj.snapshots.back());
  if (traj.snapshots.size() >= 3) m["residual"] = residual(traj, sc);
  ctx.summary.check("relative_l2_drift", relative_l2_drift(traj), "<=", tol);
}

void cmd_energies(Context& ctx) {
  const Config& c = ctx.cfg;
  const GridSpec g = read_grid(c);
  const SolverConfig sc = read_solver(c, read_equation(c));
  const MultiplierParams p = read_multiplier(c);
  const FieldSample u0 = read_initial(c, g, ctx.seed);
  const double l2_tol = c.number("check", "l2_drift", 1e-8);
  const bool derivative = c.boolean("energies", "derivative_check", false);
  const double mismatch_tol = c.number("check", "derivative_mismatch", 1e-2);
  ctx.resolved();

  const Trajectory traj = solve(u0, sc);
  const auto series = energy_series(traj, p, sc.equation.beta);
  ctx.write("energies.csv", energy_csv(series));

  double drift = 0.0;
  for (const auto& r : series) drift = std::max(drift, std::abs(r.drift_E2));
  auto& m = ctx.summary.metrics();
  m["max_drift_E2"] = drift;
  m["E2_initial"] = series.front().E2;
  ctx.summary.check("relative_l2_drift", relative_l2_drift(traj), "<=", l2_tol);

  if (derivative) {
    const DerivativeCheck d = ddt_energy_check(traj, p);
    std::ostringstream csv;
    csv << "t,dE2dt,lambda6,resonant,dE1dt,e1_rate\n";
    for (std::size_t i = 0; i < d.times.size(); ++i) {
      csv << format_double(d.times[i]) << ',' << format_double(d.dE2dt[i]) << ','
          << format_double(d.lambda6[i]) << ',' << format_double(d.resonant[i]) << ','
          << format_double(d.dE1dt[i]) << ',' << format_double(d.e1_rate[i]) << '\n';
    }
    ctx.write("derivative.csv", csv.str());
    m["c_fit"] = d.c_fit;
    m["held_out"] = d.held_out;
    m["e1_max_rel_mismatch"] = d.e1_max_rel_mismatch;
    ctx.summary.check("derivative_mismatch", d.max_rel_mismatch, "<=", mismatch_tol);
  }
}

void cmd_sweep_decay(Context& ctx) {
  const Config& c = ctx.cfg;
  const GridSpec g = read_grid(c);
  Equation eq = read_equation(c);
  if (eq.form != EquationForm::kReduced) {
    throw ConfigError(c.origin() + ": field [equation] form: the sweep integrates the reduced form");
  }
  const SolverConfig sc = read_solver(c, eq, false);
  const FieldSample u0 = read_initial(c, g, ctx.seed);
  const double s = c.number("multiplier", "s");
  const std::vector<double> Ns = c.numbers("sweep", "N_values", {8, 16, 32, 64});
  const double delta = c.number("sweep", "delta", 1.0);
  SweepOptions so;
  so.floor_factor = c.number("sweep", "floor_factor", so.floor_factor);
  const double slope_max = c.number("check", "slope_max", -1.25);
  ctx.resolved();

  const SweepResult r = decay_sweep(u0, Ns, s, sc, delta, so);
  ctx.write("sweep.csv", sweep_csv(r));
  auto& m = ctx.summary.metrics();
  m["slope"] = r.fitted_slope;
  m["intercept"] = r.fit_intercept;
  m["residual"] = r.fit_residual;
  m["fit_points"] = r.fit_points;
  m["floor"] = r.floor;
  ctx.summary.check("slope", r.fitted_slope, "<=", slope_max);
  ctx.summary.require("drift_monotone_endpoints", r.drift_values.back() <= r.drift_values.front());
  ctx.summary.check("fit_points", r.fit_points, ">=", 2);
}

std::string bounds_rows(const std::vector<BoundReport>& reports) {
  std::ostringstream csv;
  for (const auto& r : reports) {
    csv << to_string(r.label) << ',' << format_double(r.a) << ',' << format_double(r.b) << ','
        << format_double(r.N) << ',' << r.samples << ',' << r.discarded << ','
        << format_double(r.max_ratio) << ',' << format_double(r.min_ratio) << '\n';
  }
  return csv.str();
}

void cmd_verify_bounds(Context& ctx) {
  const Config& c = ctx.cfg;
  const MultiplierParams p = read_multiplier(c);
  const long samples = c.integer("bounds", "samples", 1000);
  BoundsOptions bo;
  bo.regime.c_big = c.number("bounds", "c_big", bo.regime.c_big);
  bo.regime.c_small = c.number("bounds", "c_small", bo.regime.c_small);
  bo.min_over_N = c.number("bounds", "min_over_N", bo.min_over_N);
  bo.max_over_N = c.number("bounds", "max_over_N", bo.max_over_N);
  bo.keep_all_ratios = c.boolean("bounds", "keep_ratios", false);
  const long dmvt_samples = c.integer("bounds", "dmvt_samples", samples);
  const double compare_N = c.number("bounds", "compare_N", 0.0);
  const double growth_max = c.number("check", "bound_growth", 2.0);
  if (samples < 0 || dmvt_samples < 0) {
    throw ConfigError(c.origin() + ": field [bounds] samples: must be non-negative");
  }
  ctx.resolved();

  const auto fixtures = remark_fixtures(p, bo.regime);
  std::ostringstream fx;
  fx << "name,expected,classified,xi1,xi2,xi3,xi4,delta4,bound,ratio\n";
  bool named = true;
  for (const auto& f : fixtures) {
    fx << f.name << ',' << to_string(f.expected) << ',' << to_string(f.classified);
    for (double x : f.xi) fx << ',' << format_double(x);
    fx << ',' << format_double(f.delta4) << ',' << format_double(f.bound) << ','
       << format_double(f.ratio) << '\n';
    named = named && f.classified == f.expected;
  }
  ctx.write("fixtures.csv", fx.str());
  ctx.summary.require("fixtures_classify_as_named", named);

  const std::string header = "case,a,b,N,samples,discarded,max_ratio,min_ratio\n";
  auto& m = ctx.summary.metrics();
  if (samples == 0) {
    ctx.write("bounds.csv", header);
    m["cases"] = 0;
    return;
  }

  const auto reports = verify_delta4_bounds(p, samples, ctx.seed, bo);
  std::string rows = bounds_rows(reports);
  bool finite = true;
  for (const auto& r : reports) finite = finite && std::isfinite(r.max_ratio);
  ctx.summary.require("ratios_finite", finite);
  m["cases"] = reports.size();

  if (compare_N > 0.0) {
    const MultiplierParams q(compare_N, p.s());
    const auto other = verify_delta4_bounds(q, samples, ctx.seed + 1, bo);
    rows += bounds_rows(other);
    double worst = 0.0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (reports[i].max_ratio > 0.0) worst = std::max(worst, other[i].max_ratio / reports[i].max_ratio);
    }
    ctx.summary.check("max_ratio_growth", worst, "<=", growth_max);
  }
  ctx.write("bounds.csv", header + rows);

  if (bo.keep_all_ratios) {
    std::ostringstream rc;
    rc << "case,a,b,index,ratio\n";
    for (const auto& r : reports) {
      for (std::size_t i = 0; i < r.ratios.size(); ++i) {
        rc << to_string(r.label) << ',' << format_double(r.a) << ',' << format_double(r.b) << ','
           << i << ',' << format_double(r.ratios[i]) << '\n';
      }
    }
    ctx.write("ratios.csv", rc.str());
  }

  if (dmvt_samples > 0) {
    const DmvtReport d = verify_dmvt(p, dmvt_samples, ctx.seed);
    m["dmvt_samples"] = d.samples;
    ctx.summary.check("dmvt_max_ratio", d.max_ratio, "<=", 4.0);
  }
}

FreeWaveSampling read_sampling(const Config& c, const char* section, std::uint64_t seed) {
  FreeWaveSampling fw;
  fw.band_lo = static_cast<int>(c.integer(section, "band_lo", fw.band_lo));
  fw.band_hi = static_cast<int>(c.integer(section, "band_hi", fw.band_hi));
  fw.time_span = c.number(section, "time_span", 0.1);
  fw.num_time_samples = static_cast<int>(c.integer(section, "time_samples", 0));
  fw.positive_only = c.boolean(section, "positive_only", false);
  fw.seed = seed;
  return fw;
}

void cmd_verify_trilinear(Context& ctx) {
  const Config& c = ctx.cfg;
  const GridSpec g = read_grid(c);
  const double s = c.number("trilinear", "s", -0.125);
  const double b = c.number("trilinear", "b", 7.0 / 12.0 + 0.01);
  const double bp = c.number("trilinear", "b_prime", -1.0 / 24.0 - 0.01);
  const long tri_samples = c.integer("trilinear", "samples", 20);
  const FreeWaveSampling tw = read_sampling(c, "trilinear", ctx.seed);
  const long st_samples = c.integer("strichartz", "samples", 20);
  const FreeWaveSampling sw = read_sampling(c, "strichartz", ctx.seed);
  const double s1 = c.number("strichartz", "s1", -0.25);
  const double s2 = c.number("strichartz", "s2", 0.0);
  const double sb = c.number("strichartz", "b", 0.51);
  const bool refine = c.boolean("trilinear", "refine", true);
  const double growth_max = c.number("check", "refinement_growth", 1.5);
  ctx.resolved();

  auto doubled = [](FreeWaveSampling fw) {
    fw.band_lo *= 2;
    fw.band_hi *= 2;
    return fw;
  };
  auto& m = ctx.summary.metrics();

  std::ostringstream tc;
  tc << "band_lo,band_hi,samples,sup_ratio\n";
  const TrilinearReport t = verify_trilinear(g, s, b, bp, tri_samples, tw);
  tc << tw.band_lo << ',' << tw.band_hi << ',' << t.samples << ',' << format_double(t.sup_ratio) << '\n';
  ctx.summary.require("trilinear_finite", std::isfinite(t.sup_ratio));
  if (t.warning_b) m["warning"] = "b <= 1/2";
  if (!t.note.empty()) m["note"] = t.note;
  if (refine) {
    const FreeWaveSampling tw2 = doubled(tw);
    const TrilinearReport t2 = verify_trilinear(g, s, b, bp, tri_samples, tw2);
    tc << tw2.band_lo << ',' << tw2.band_hi << ',' << t2.samples << ','
       << format_double(t2.sup_ratio) << '\n';
    const double growth = t.sup_ratio > 0.0 ? t2.sup_ratio / t.sup_ratio : 0.0;
    m["trilinear_growth"] = growth;
    ctx.summary.check("trilinear_refinement_growth", growth, "<=", growth_max);
  }
  ctx.write("trilinear.csv", tc.str());

  std::ostringstream sc;
  sc << "band_lo,band_hi,samples,skipped,sup_l5l10,sup_l203l5\n";
  auto strichartz_row = [&](const FreeWaveSampling& fw) {
    const StrichartzReport r = verify_strichartz(g, st_samples, fw, s1, s2, sb);
    sc << fw.band_lo << ',' << fw.band_hi << ',' << r.samples << ',' << r.skipped << ','
       << format_double(r.sup_ratio_l5l10) << ',' << format_double(r.sup_ratio_l203l5) << '\n';
    return r;
  };
  const StrichartzReport r1 = strichartz_row(sw);
  ctx.summary.require("strichartz_finite",
                      std::isfinite(r1.sup_ratio_l5l10) && std::isfinite(r1.sup_ratio_l203l5));
  if (refine) {
    const StrichartzReport r2 = strichartz_row(doubled(sw));
    const double g1 = r1.sup_ratio_l5l10 > 0 ? r2.sup_ratio_l5l10 / r1.sup_ratio_l5l10 : 0.0;
    const double g2 = r1.sup_ratio_l203l5 > 0 ? r2.sup_ratio_l203l5 / r1.sup_ratio_l203l5 : 0.0;
    ctx.summary.check("strichartz_l5l10_growth", g1, "<=", growth_max);
    ctx.summary.check("strichartz_l203l5_growth", g2, "<=", growth_max);
  }
  ctx.write("strichartz.csv", sc.str());
}

void cmd_gauge_check(Context& ctx) {
  const Config& c = ctx.cfg;
  const GridSpec g = read_grid(c);
  const double alpha_in = c.number("equation", "alpha", 1.0);
  const double beta = c.number("equation", "beta", 1.0);
  SolverConfig sc = read_solver(c, Equation{EquationForm::kFull, alpha_in, beta});
  const FieldSample u0 = read_initial(c, g, ctx.seed);
  const double tol = c.number("check", "gauge_l2", 1e-5);
  ctx.resolved();

  const AlphaSnap snap = snap_alpha(alpha_in, g);
  const GaugeParams gp = reduction_params(snap.alpha);
  auto& m = ctx.summary.metrics();
  m["alpha_requested"] = alpha_in;
  m["alpha_snapped"] = snap.alpha;
  m["carrier_mode"] = snap.carrier_mode;

  sc.equation.alpha = snap.alpha;
  sc.snapshot_stride = static_cast<int>(std::lround(sc.t_end / sc.dt));
  const Trajectory direct = solve(u0, sc);
  SolverConfig rc = sc;
  rc.equation = Equation{EquationForm::kReduced, 0.0, beta};
  rc.time_direction = -sc.time_direction;
  const Trajectory gauged = apply_gauge(solve(invert_gauge_slice(u0, gp), rc), gp);

  std::ostringstream csv;
  csv << "t,l2_direct,l2_gauged,l2_difference\n";
  double worst = 0.0;
  for (std::size_t i = 0; i < direct.snapshots.size(); ++i) {
    const FieldSample& a = direct.snapshots[i];
    FieldSample d = a;
    for (std::size_t j = 0; j < d.values.size(); ++j) d.values[j] -= gauged.snapshots[i].values[j];
    const double diff = l2_norm(d);
    worst = std::max(worst, diff);
    csv << format_double(a.time) << ',' << format_double(l2_norm(a)) << ','
        << format_double(l2_norm(gauged.snapshots[i])) << ',' << format_double(diff) << '\n';
  }
  ctx.write("gauge.csv", csv.str());
  ctx.summary.check("l2_discrepancy", worst, "<=", tol);
}

void cmd_plan(Context& ctx) {
  const Config& c = ctx.cfg;
  const double T = c.number("plan", "T");
  const std::string s_text = c.text("plan", "s");
  const Rational s = parse_rational(s_text, c, "plan", "s");
  const double constant = c.number("plan", "c", 1.0);
  ctx.resolved();

  const GwpPlan pl = plan(T, s.to_double(), constant);
  nlohmann::ordered_json j;
  j["T"] = pl.T;
  j["s"] = s.str();
  j["c"] = pl.c;
  j["exponent"] = gwp_exponent(s).str();
  j["exponent_value"] = pl.exponent;
  j["feasible"] = pl.feasible;
  if (pl.feasible) {
    j["N"] = pl.N;
    j["lambda"] = pl.lambda;
    j["num_iterations"] = pl.num_iterations;
  } else {
    j["N"] = "inf";
    j["lambda"] = "inf";
    j["num_iterations"] = "inf";
  }
  j["local_step"] = pl.local_step;
  j["theta"] = pl.theta;
  write_json_atomic(ctx.out / "plan.json", j);
  ctx.summary.output("plan.json");
  ctx.summary.metrics() = j;
  ctx.summary.require("feasible", pl.feasible);
}

const std::map<std::string, std::function<void(Context&)>>& registry() {
  static const std::map<std::string, std::function<void(Context&)>> r = {
      {"simulate", cmd_simulate},
      {"energies", cmd_energies},
      {"sweep-decay", cmd_sweep_decay},
      {"verify-bounds", cmd_verify_bounds},
      {"verify-trilinear", cmd_verify_trilinear},
      {"gauge-check", cmd_gauge_check},
      {"plan", cmd_plan},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

int run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  const auto it = registry().find(opts.command);
  if (it == registry().end()) {
    err << "unknown command '" << opts.command << "'\n";
    return 2;
  }
  Context ctx{Config{}, opts.out, 1, opts.deterministic, opts.dry_run, Summary(opts.command)};
  const auto started = std::chrono::steady_clock::now();
  try {
    ctx.cfg = opts.config_path.empty() ? Config{} : Config::load(opts.config_path);
    ctx.cfg.apply_environment();
    ctx.seed = opts.seed ? *opts.seed : static_cast<std::uint64_t>(ctx.cfg.integer("run", "seed", 1));
    if (opts.deterministic) set_worker_threads(1);
    it->second(ctx);
  } catch (const DryRunStop&) {
    nlohmann::ordered_json j;
    j["command"] = opts.command;
    j["out"] = opts.out.string();
    j["seed"] = ctx.seed;
    j["deterministic"] = opts.deterministic;
    j["config"] = ctx.cfg.resolved();
    out << j.dump(2) << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "enls_lab " << opts.command << ": " << e.what() << '\n';
    ctx.summary.fail(e.what());
    if (opts.dry_run) return 2;
  }

  nlohmann::ordered_json manifest;
  manifest["command"] = opts.command;
  manifest["config_file"] = opts.config_path.string();
  manifest["seed"] = ctx.seed;
  manifest["deterministic"] = opts.deterministic;
  manifest["config"] = ctx.cfg.resolved();
  nlohmann::ordered_json summary = ctx.summary.to_json();
  if (!opts.deterministic) {
    summary["wall_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  try {
    write_json_atomic(opts.out / "manifest.json", manifest);
    write_json_atomic(opts.out / "summary.json", summary);
  } catch (const std::exception& e) {
    err << "enls_lab " << opts.command << ": cannot write summary: " << e.what() << '\n';
    return 3;
  }
  out << (ctx.summary.pass() ? "PASS" : "FAIL") << ' ' << opts.command << " -> "
      << (opts.out / "summary.json").string() << '\n';
  return ctx.summary.pass() ? 0 : 1;
}

}  // namespace enls::lab

// ios_sim: batch front end mapping scenario files to the toolkit modules.
// Subcommands: scatter | fit | pattern | optimize | testbed.
// Exit codes: 0 success, 2 config error, 3 geometry/sweep error, 4 capability.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "iosim/defaults.hpp"
#include "iosim/io.hpp"
#include "iosim/parallel.hpp"
#include "iosim/scenario.hpp"
#include "iosim/testbed.hpp"

namespace {

using namespace iosim;

constexpr const char* kVersion = "1.0.0";

struct CliOptions {
  std::string scenario_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::string solver;
  int threads = 0;
  std::string targets_csv; // fit only
};

std::string csv_complex(cplx v) {
  return g17(v.real()) + "," + g17(v.imag());
}

std::string states_string(const std::vector<std::uint8_t>& s) {
  std::string out;
  for (std::uint8_t b : s) out += b ? '1' : '0';
  return out;
}

double rad_to_deg(double r) { return r * 180.0 / kPi; }

// ---------------------------------------------------------------- scatter

void cmd_scatter(const Scenario& sc, RunManifest& mf, const std::string& dir) {
  const AngleParamTable table = sc.effective_table();
  const std::vector<double> freqs = sc.frequency.grid();
  std::ostringstream csv;
  csv << "state,freq_ghz,theta_deg,re_gr,im_gr,abs_gr,phase_gr_deg,"
         "re_gt,im_gt,abs_gt,phase_gt_deg\n";
  for (int on = 0; on <= 1; ++on) {
    const ElementState state = make_element_state(on != 0, sc.diodes_per_layer);
    for (double theta_deg : sc.incidence_theta_deg) {
      const IncidenceAngle angle{deg_to_rad(theta_deg), 0.0};
      for (double f : freqs) {
        const ScatterResponse r = element_response(table, state, angle, f);
        csv << (on ? "on" : "off") << ',' << g17(f / 1e9) << ','
            << g17(theta_deg) << ',' << csv_complex(r.gamma_r) << ','
            << g17(std::abs(r.gamma_r)) << ','
            << g17(rad_to_deg(std::arg(r.gamma_r))) << ','
            << csv_complex(r.gamma_t) << ',' << g17(std::abs(r.gamma_t)) << ','
            << g17(rad_to_deg(std::arg(r.gamma_t))) << '\n';
      }
    }
  }
  emit_file(mf, dir, sc.output_prefix + "_scatter.csv", csv.str());
}

// -------------------------------------------------------------------- fit

std::string ys_json(const YsTable& t) {
  std::ostringstream os;
  os << "{\"freq_ghz\": [";
  for (std::size_t i = 0; i < t.freq_hz.size(); ++i) {
    os << (i ? ", " : "") << g17(t.freq_hz[i] / 1e9);
  }
  os << "], \"re\": [";
  for (std::size_t i = 0; i < t.value.size(); ++i) {
    os << (i ? ", " : "") << g17(t.value[i].real());
  }
  os << "], \"im\": [";
  for (std::size_t i = 0; i < t.value.size(); ++i) {
    os << (i ? ", " : "") << g17(t.value[i].imag());
  }
  os << "]}";
  return os.str();
}

void cmd_fit(const Scenario& sc, const CliOptions& cli, RunManifest& mf,
             const std::string& dir) {
  const AngleParamTable table = sc.effective_table();
  const CircuitParams init =
      interpolate_params(table, IncidenceAngle{0.0, 0.0});
  FitTarget target;
  if (!cli.targets_csv.empty()) {
    target = load_fit_targets_csv(cli.targets_csv, sc.diodes_per_layer);
  } else {
    // Self-targets from the scenario table: round-trip fit check.
    for (int on = 0; on <= 1; ++on) {
      const ElementState state =
          make_element_state(on != 0, sc.diodes_per_layer);
      for (double f : sc.frequency.grid()) {
        FitPoint p;
        p.state = state;
        p.freq_hz = f;
        const ScatterResponse r = evaluate_params(init, state, f);
        p.gamma_r = r.gamma_r;
        p.gamma_t = r.gamma_t;
        target.points.push_back(p);
      }
    }
  }
  FitOptions opt;
  opt.seed = sc.seed;
  // interpolation of a flat table can round a hair under the default floor
  opt.bounds.ys_real.lo = 1e-9;
  const FitResult res = fit_params(target, init, opt);
  std::ostringstream js;
  js << "{\n";
  js << "  \"residual\": " << g17(res.residual) << ",\n";
  js << "  \"iterations\": " << res.iterations << ",\n";
  js << "  \"converged\": " << (res.converged ? "true" : "false") << ",\n";
  js << "  \"params\": {\n";
  js << "    \"r_ohm\": [" << g17(res.params.r1) << ", " << g17(res.params.r2)
     << ", " << g17(res.params.r3) << "],\n";
  js << "    \"l_nh\": [" << g17(res.params.l1 * 1e9) << ", "
     << g17(res.params.l2 * 1e9) << ", " << g17(res.params.l3 * 1e9) << "],\n";
  js << "    \"c_pf\": [" << g17(res.params.c1 * 1e12) << ", "
     << g17(res.params.c2 * 1e12) << ", " << g17(res.params.c3 * 1e12)
     << "],\n";
  js << "    \"d1_cm\": " << g17(res.params.d1 * 1e2) << ",\n";
  js << "    \"d2_cm\": " << g17(res.params.d2 * 1e2) << ",\n";
  js << "    \"ys1\": " << ys_json(res.params.ys1) << ",\n";
  js << "    \"ys2\": " << ys_json(res.params.ys2) << "\n";
  js << "  }\n";
  js << "}\n";
  emit_file(mf, dir, sc.output_prefix + "_fit.json", js.str());
}

// ----------------------------------------------------------------- pattern

struct GroupContribs {
  // field contribution of each group for state 0 / 1, on the sweep grid
  std::vector<std::array<BeamPattern, 2>> by_group;
};

GroupContribs group_contributions(const Scenario& sc,
                                  const AngleParamTable& table,
                                  const std::vector<double>& grid) {
  GroupContribs gc;
  gc.by_group.resize(static_cast<std::size_t>(sc.grouping.num_groups));
  for (int m = 0; m < sc.grouping.num_groups; ++m) {
    ArrayLayout masked = sc.layout;
    masked.active.assign(static_cast<std::size_t>(sc.layout.count()), 0);
    for (int e = 0; e < sc.layout.count(); ++e) {
      if (sc.layout.is_active(e) &&
          sc.grouping.group_of[static_cast<std::size_t>(e)] == m) {
        masked.active[static_cast<std::size_t>(e)] = 1;
      }
    }
    GroupConfiguration single = GroupConfiguration::uniform(masked);
    for (int b = 0; b <= 1; ++b) {
      single.s[0] = static_cast<std::uint8_t>(b);
      gc.by_group[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)] =
          reference_pattern(masked, single, table, sc.tx.front(), grid,
                            sc.center_frequency_hz, sc.diodes_per_layer);
    }
  }
  return gc;
}

double power_at(const GroupContribs& gc, const std::vector<std::uint8_t>& s,
                std::size_t i) {
  cplx acc{0.0, 0.0};
  for (std::size_t m = 0; m < s.size(); ++m) {
    acc += gc.by_group[m][s[m]].field[i];
  }
  return std::norm(acc);
}

std::vector<std::uint8_t> best_states_at(const GroupContribs& gc,
                                         std::size_t target_idx) {
  const std::size_t m = gc.by_group.size();
  if (m <= 16) {
    std::vector<std::uint8_t> best(m, 0), s(m, 0);
    double best_p = -1.0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      for (std::size_t g = 0; g < m; ++g) s[g] = (mask >> g) & 1u;
      const double p = power_at(gc, s, target_idx);
      if (p > best_p) {
        best_p = p;
        best = s;
      }
    }
    return best;
  }
  // coordinate ascent for large group counts
  std::vector<std::uint8_t> s(m, 0);
  bool changed = true;
  int sweeps = 0;
  while (changed && sweeps++ < 64) {
    changed = false;
    for (std::size_t g = 0; g < m; ++g) {
      const double p0 = power_at(gc, s, target_idx);
      s[g] ^= 1u;
      if (power_at(gc, s, target_idx) > p0) changed = true;
      else s[g] ^= 1u;
    }
  }
  return s;
}

void cmd_pattern(const Scenario& sc, RunManifest& mf, const std::string& dir) {
  if (sc.tx.empty()) throw ConfigError("pattern: scenario has no tx antenna");
  if (sc.layout.count() < 1) throw ConfigError("pattern: scenario has no layout");
  const AngleParamTable table = sc.effective_table();
  const std::vector<double> grid = sc.pattern.grid();
  std::vector<double> targets = sc.pattern.targets_deg;
  if (targets.empty()) targets.push_back(0.0);
  const GroupContribs gc = group_contributions(sc, table, grid);

  std::ostringstream csv, js;
  csv << "target_deg,sweep_deg,power\n";
  js << "{\n  \"targets\": [\n";
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const double target = targets[t];
    if (target < grid.front() - 1e-9 || target > grid.back() + 1e-9) {
      throw GeometryError("pattern: target " + g17(target) +
                          " deg outside the sweep");
    }
    std::size_t ti = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (std::abs(grid[i] - target) < std::abs(grid[ti] - target)) ti = i;
    }
    const std::vector<std::uint8_t> s = best_states_at(gc, ti);
    BeamPattern p;
    p.kind = PatternKind::Power;
    p.sweep_deg = grid;
    p.directions = gc.by_group[0][0].directions;
    p.power.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      p.power[i] = power_at(gc, s, i);
    }
    const PatternMetrics m = pattern_metrics(p);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      csv << g17(target) << ',' << g17(grid[i]) << ',' << g17(p.power[i])
          << '\n';
    }
    js << "    {\"target_deg\": " << g17(target) << ", \"states\": \""
       << states_string(s) << "\", \"beam_deg\": " << g17(m.beam_sweep_deg)
       << ", \"hpbw_deg\": "
       << (m.hpbw_defined ? g17(m.hpbw_deg) : std::string("null"))
       << ", \"sll_db\": "
       << (m.sll.found ? g17(m.sll.db) : std::string("null"))
       << ", \"efficiency\": " << g17(m.efficiency) << "}"
       << (t + 1 < targets.size() ? "," : "") << "\n";
  }
  js << "  ]\n}\n";
  emit_file(mf, dir, sc.output_prefix + "_pattern.csv", csv.str());
  emit_file(mf, dir, sc.output_prefix + "_metrics.json", js.str());
}

// ---------------------------------------------------------------- optimize

std::vector<Vec3> tx_positions(const Scenario& sc) {
  std::vector<Vec3> p;
  for (const TxAntenna& t : sc.tx) p.push_back(t.position);
  return p;
}

ProblemSpec make_problem(const Scenario& sc, ChannelSet cs) {
  ProblemSpec spec;
  spec.channels = std::move(cs);
  spec.budget = sc.budget;
  spec.objective = sc.problem.objective;
  spec.gamma0 = sc.problem.gamma0;
  spec.solver = sc.problem.solver;
  spec.interference = sc.problem.interference;
  spec.seed = sc.seed;
  spec.max_iterations = sc.problem.max_iterations;
  spec.annealing = sc.problem.annealing;
  return spec;
}

// Direct-path-only channels: the "No IOS" baseline forces every element
// coefficient to zero, leaving the tx -> rx line of sight (if modeled).
std::vector<cplx> no_ios_channel(const Scenario& sc) {
  const std::size_t k = sc.tx.size(), j = sc.rx.size();
  std::vector<cplx> h(k * j, cplx{0.0, 0.0});
  if (!sc.model.direct_path) return h;
  const double lambda = sc.budget.lambda();
  const double beta = 2.0 * kPi / lambda;
  const double hop = lambda / (4.0 * kPi);
  const double gain =
      std::pow(10.0, (sc.budget.tx_gain_dbi + sc.budget.rx_gain_dbi) / 20.0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < j; ++b) {
      const double d = (sc.rx[b] - sc.tx[a].position).norm();
      if (d < 1e-15) throw GeometryError("no-ios baseline: tx == rx");
      h[a * j + b] = gain * hop *
                     std::pow(d, -0.5 * sc.budget.pathloss_exponent) *
                     std::polar(1.0, -beta * d);
    }
  }
  return h;
}

RateReport rate_for_channel(const Scenario& sc, const std::vector<cplx>& h) {
  bool all_zero = true;
  for (const cplx& v : h) all_zero &= v == cplx{0.0, 0.0};
  if (all_zero) {
    RateReport r;
    r.sinr.assign(sc.rx.size(), 0.0);
    r.rate.assign(sc.rx.size(), 0.0);
    return r;
  }
  const std::vector<cplx> v =
      digital_beamformer(h, sc.tx.size(), sc.rx.size(), sc.budget);
  return sinr_and_rate(v, h, sc.tx.size(), sc.rx.size(), sc.budget,
                       sc.problem.interference);
}

void cmd_optimize(const Scenario& sc, RunManifest& mf, const std::string& dir) {
  if (sc.tx.empty() || sc.rx.empty()) {
    throw ConfigError("optimize: scenario needs tx and rx");
  }
  if (sc.layout.count() < 1) throw ConfigError("optimize: scenario has no layout");
  const AngleParamTable table = sc.effective_table();
  const std::vector<Vec3> txp = tx_positions(sc);

  const ChannelSet cs =
      group_deltas(sc.layout, sc.grouping, table, sc.budget, txp, sc.rx,
                   sc.channel_options(), sc.diodes_per_layer);
  const Solution sol = solve(make_problem(sc, cs));
  const RateReport no_ios = rate_for_channel(sc, no_ios_channel(sc));

  std::ostringstream csv;
  csv << "case,rows,cols,num_elements,min_rate,sum_rate\n";
  double no_ios_sum = 0.0;
  for (double r : no_ios.rate) no_ios_sum += r;
  csv << "no_ios,0,0,0," << g17(no_ios.min_rate) << ',' << g17(no_ios_sum)
      << '\n';
  csv << "ios," << sc.layout.rows << ',' << sc.layout.cols << ','
      << sc.layout.active_count() << ',' << g17(sol.report.min_rate) << ','
      << g17(sol.report.sum_rate) << '\n';

  for (int k : sc.size_scale) {
    ArrayLayout scaled = sc.layout;
    scaled.rows = sc.layout.rows * k;
    scaled.active.clear();
    // control granularity grows with the surface, as in the prototype
    GroupConfiguration chunks;
    chunks.num_groups = sc.grouping.num_groups * k;
    chunks.group_of.resize(static_cast<std::size_t>(scaled.count()));
    for (int e = 0; e < scaled.count(); ++e) {
      chunks.group_of[static_cast<std::size_t>(e)] = static_cast<int>(
          static_cast<long long>(e) * chunks.num_groups / scaled.count());
    }
    chunks.s.assign(static_cast<std::size_t>(chunks.num_groups), 0);
    const ChannelSet cs_k =
        group_deltas(scaled, chunks, table, sc.budget, txp, sc.rx,
                     sc.channel_options(), sc.diodes_per_layer);
    const Solution sol_k = solve(make_problem(sc, cs_k));
    csv << "size_" << k << ',' << scaled.rows << ',' << scaled.cols << ','
        << scaled.count() << ',' << g17(sol_k.report.min_rate) << ','
        << g17(sol_k.report.sum_rate) << '\n';
  }
  emit_file(mf, dir, sc.output_prefix + "_rates.csv", csv.str());

  std::ostringstream js;
  js << "{\n";
  js << "  \"states\": \"" << states_string(sol.s) << "\",\n";
  js << "  \"objective_value\": " << g17(sol.objective_value) << ",\n";
  js << "  \"feasible\": " << (sol.feasible ? "true" : "false") << ",\n";
  js << "  \"zf_fallback\": " << (sol.zf_fallback ? "true" : "false") << ",\n";
  js << "  \"min_rate\": " << g17(sol.report.min_rate) << ",\n";
  js << "  \"sum_rate\": " << g17(sol.report.sum_rate) << ",\n";
  js << "  \"sinr\": [";
  for (std::size_t i = 0; i < sol.report.sinr.size(); ++i) {
    js << (i ? ", " : "") << g17(sol.report.sinr[i]);
  }
  js << "],\n  \"rate\": [";
  for (std::size_t i = 0; i < sol.report.rate.size(); ++i) {
    js << (i ? ", " : "") << g17(sol.report.rate[i]);
  }
  js << "],\n  \"violations\": [";
  for (std::size_t i = 0; i < sol.violations.size(); ++i) {
    js << (i ? ", " : "") << "{\"constraint\": \""
       << sol.violations[i].constraint
       << "\", \"index\": " << sol.violations[i].index
       << ", \"margin\": " << g17(sol.violations[i].margin) << "}";
  }
  js << "]\n}\n";
  emit_file(mf, dir, sc.output_prefix + "_solution.json", js.str());
}

// ----------------------------------------------------------------- testbed

void cmd_testbed(const Scenario& sc, RunManifest& mf, const std::string& dir) {
  if (sc.tx.empty() || sc.rx.empty()) {
    throw ConfigError("testbed: scenario needs tx and rx");
  }
  if (sc.layout.count() < 1) throw ConfigError("testbed: scenario has no layout");
  const AngleParamTable table = sc.effective_table();
  const ChannelSet truth =
      group_deltas(sc.layout, sc.grouping, table, sc.budget, tx_positions(sc),
                   sc.rx, sc.channel_options(), sc.diodes_per_layer);

  LinkBudget tb = sc.budget;
  if (sc.testbed.noise_w) tb.noise_w = *sc.testbed.noise_w;
  std::mt19937_64 rng(sc.seed);
  const std::size_t u = sc.testbed.samples;

  // Probe configuration used for the rate comparison: alternate group states.
  std::vector<std::uint8_t> s(truth.num_groups, 0);
  for (std::size_t m = 0; m < s.size(); ++m) s[m] = m % 2;
  const std::vector<cplx> h_true = assemble_channel(truth, s);

  std::ostringstream csv;
  csv << "run,sigma2_hat,channel_rel_rms,min_rate_true,min_rate_measured\n";
  double sigma_acc = 0.0, rms_acc = 0.0;
  for (int run = 0; run < sc.testbed.runs; ++run) {
    // Noise estimate from an idle capture (all precoder weights zero).
    std::vector<cplx> idle;
    const std::vector<cplx> v0(truth.num_tx * truth.num_rx, cplx{0.0, 0.0});
    const std::vector<cplx> x(truth.num_rx, cplx{1.0, 0.0});
    for (std::size_t i = 0; i < u; ++i) {
      idle.push_back(received_signal(truth, s, v0, x, tb, rng)[0]);
    }
    const NoiseEstimate noise = estimate_noise(idle);

    const ChannelSet probed = probe_group_deltas(truth, tb, u, rng);
    const std::vector<cplx> h_meas = assemble_channel(probed, s);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < h_true.size(); ++i) {
      num += std::norm(h_meas[i] - h_true[i]);
      den += std::norm(h_true[i]);
    }
    const double rel_rms = den > 0.0 ? std::sqrt(num / den) : 0.0;

    const RateReport r_true = rate_for_channel(sc, h_true);
    const RateReport r_meas = rate_for_channel(sc, h_meas);
    csv << run << ',' << g17(noise.sigma2_hat) << ',' << g17(rel_rms) << ','
        << g17(r_true.min_rate) << ',' << g17(r_meas.min_rate) << '\n';
    sigma_acc += noise.sigma2_hat;
    rms_acc += rel_rms;
  }
  emit_file(mf, dir, sc.output_prefix + "_testbed.csv", csv.str());

  std::ostringstream js;
  js << "{\n";
  js << "  \"samples\": " << u << ",\n";
  js << "  \"runs\": " << sc.testbed.runs << ",\n";
  js << "  \"sigma2_true\": " << g17(tb.noise_w) << ",\n";
  js << "  \"sigma2_hat_mean\": " << g17(sigma_acc / sc.testbed.runs) << ",\n";
  js << "  \"channel_rel_rms_mean\": " << g17(rms_acc / sc.testbed.runs)
     << "\n";
  js << "}\n";
  emit_file(mf, dir, sc.output_prefix + "_report.json", js.str());
}

// -------------------------------------------------------------------- main

int run(const std::string& cmd, const CliOptions& cli) {
  std::ifstream in(cli.scenario_path);
  if (!in) throw ConfigError("cannot open scenario '" + cli.scenario_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  Scenario sc = parse_scenario(text, cli.scenario_path);
  if (cli.seed) sc.seed = *cli.seed;
  if (!cli.solver.empty()) {
    if (cli.solver == "exhaustive") sc.problem.solver = SolverKind::Exhaustive;
    else if (cli.solver == "alternating") sc.problem.solver = SolverKind::Alternating;
    else if (cli.solver == "annealing") sc.problem.solver = SolverKind::Annealing;
    else throw ConfigError("unknown solver '" + cli.solver + "'");
  }

  std::filesystem::create_directories(cli.out_dir);
  RunManifest mf;
  mf.tool_version = kVersion;
  mf.scenario_hash = fnv1a(text);
  mf.seed = sc.seed;
  const auto start = std::chrono::steady_clock::now();

  if (cmd == "scatter") cmd_scatter(sc, mf, cli.out_dir);
  else if (cmd == "fit") cmd_fit(sc, cli, mf, cli.out_dir);
  else if (cmd == "pattern") cmd_pattern(sc, mf, cli.out_dir);
  else if (cmd == "optimize") cmd_optimize(sc, mf, cli.out_dir);
  else if (cmd == "testbed") cmd_testbed(sc, mf, cli.out_dir);

  mf.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  const std::filesystem::path mpath =
      std::filesystem::path(cli.out_dir) / (sc.output_prefix + "_manifest.json");
  std::ofstream mout(mpath, std::ios::binary);
  if (!mout) throw ConfigError("cannot write '" + mpath.string() + "'");
  mout << mf.to_json();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"IOS element, array, and link simulation toolkit"};
  app.require_subcommand(1);
  CliOptions cli;
  std::string cmd;
  for (const char* name : {"scatter", "fit", "pattern", "optimize", "testbed"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--scenario", cli.scenario_path, "Scenario JSON file")
        ->required();
    sub->add_option("--out", cli.out_dir, "Output directory");
    sub->add_option("--seed", cli.seed, "Override the scenario seed");
    sub->add_option("--solver", cli.solver,
                    "Override the solver (exhaustive|alternating|annealing)");
    sub->add_option("--threads", cli.threads,
                    "Worker threads (0 = auto; env IOS_SIM_THREADS)");
    if (std::string(name) == "fit") {
      sub->add_option("--targets", cli.targets_csv,
                      "Fit-target CSV (scatter layout); default: round-trip "
                      "targets from the scenario");
    }
    sub->callback([&cmd, name] { cmd = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cli.threads == 0) {
    if (const char* env = std::getenv("IOS_SIM_THREADS")) {
      cli.threads = std::atoi(env);
    }
  }
  iosim::set_thread_count(cli.threads > 0 ? cli.threads : 0);

  try {
    return run(cmd, cli);
  } catch (const iosim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const iosim::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return 3;
  } catch (const iosim::ExtrapolationError& e) {
    std::cerr << "sweep error: " << e.what() << "\n";
    return 3;
  } catch (const iosim::CapabilityError& e) {
    std::cerr << "capability error: " << e.what()
              << "\nHint: switch to --solver alternating or annealing, or "
                 "reduce the group count.\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

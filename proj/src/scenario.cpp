#include "iosim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iosim/defaults.hpp"

namespace iosim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("scenario: " + path + ": " + what);
}

void check_keys(const json& o, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!o.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : o.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) fail(path + "." + key, "unknown key");
  }
}

double get_num(const json& o, const std::string& path) {
  if (!o.is_number()) fail(path, "expected a number");
  return o.get<double>();
}

int get_int(const json& o, const std::string& path) {
  if (!o.is_number_integer()) fail(path, "expected an integer");
  return o.get<int>();
}

bool get_bool(const json& o, const std::string& path) {
  if (!o.is_boolean()) fail(path, "expected a boolean");
  return o.get<bool>();
}

std::string get_str(const json& o, const std::string& path) {
  if (!o.is_string()) fail(path, "expected a string");
  return o.get<std::string>();
}

std::vector<double> get_num_array(const json& o, const std::string& path) {
  if (!o.is_array()) fail(path, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < o.size(); ++i) {
    out.push_back(get_num(o[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Vec3 get_vec3(const json& o, const std::string& path) {
  const auto v = get_num_array(o, path);
  if (v.size() != 3) fail(path, "expected [x, y, z]");
  return {v[0], v[1], v[2]};
}

double dbm_to_w(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

YsTable parse_ys(const json& o, const std::string& path) {
  check_keys(o, path, {"freq_ghz", "re", "im"});
  if (!o.contains("freq_ghz") || !o.contains("re") || !o.contains("im")) {
    fail(path, "needs freq_ghz, re, im");
  }
  const auto f = get_num_array(o["freq_ghz"], path + ".freq_ghz");
  const auto re = get_num_array(o["re"], path + ".re");
  const auto im = get_num_array(o["im"], path + ".im");
  if (re.size() != f.size() || im.size() != f.size()) {
    fail(path, "freq_ghz/re/im must have equal length");
  }
  YsTable t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    t.freq_hz.push_back(f[i] * 1e9);
    t.value.emplace_back(re[i], im[i]);
  }
  return t;
}

PinDiodeModel parse_pin(const json& o, const std::string& path) {
  check_keys(o, path,
             {"on_resistance_ohm", "on_inductance_nh", "off_inductance_nh",
              "off_capacitance_pf", "off_resistance_ohm"});
  PinDiodeModel p;
  if (o.contains("on_resistance_ohm")) {
    p.on_resistance = get_num(o["on_resistance_ohm"], path + ".on_resistance_ohm");
  }
  if (o.contains("on_inductance_nh")) {
    p.on_inductance = get_num(o["on_inductance_nh"], path + ".on_inductance_nh") * 1e-9;
  }
  if (o.contains("off_inductance_nh")) {
    p.off_inductance = get_num(o["off_inductance_nh"], path + ".off_inductance_nh") * 1e-9;
  }
  if (o.contains("off_capacitance_pf")) {
    p.off_capacitance = get_num(o["off_capacitance_pf"], path + ".off_capacitance_pf") * 1e-12;
  }
  if (o.contains("off_resistance_ohm")) {
    p.off_resistance = get_num(o["off_resistance_ohm"], path + ".off_resistance_ohm");
  }
  return p;
}

CircuitParams parse_params(const json& o, const std::string& path) {
  check_keys(o, path,
             {"r_ohm", "l_nh", "c_pf", "d1_cm", "d2_cm", "ys1", "ys2", "pin"});
  CircuitParams p = default_element_params();
  auto triple = [&](const char* key, double scale, double& a, double& b,
                    double& c) {
    if (!o.contains(key)) return;
    const auto v = get_num_array(o[key], path + "." + key);
    if (v.size() != 3) fail(path + "." + key, "expected three values");
    a = v[0] * scale;
    b = v[1] * scale;
    c = v[2] * scale;
  };
  triple("r_ohm", 1.0, p.r1, p.r2, p.r3);
  triple("l_nh", 1e-9, p.l1, p.l2, p.l3);
  triple("c_pf", 1e-12, p.c1, p.c2, p.c3);
  if (o.contains("d1_cm")) p.d1 = get_num(o["d1_cm"], path + ".d1_cm") * 1e-2;
  if (o.contains("d2_cm")) p.d2 = get_num(o["d2_cm"], path + ".d2_cm") * 1e-2;
  if (o.contains("ys1")) p.ys1 = parse_ys(o["ys1"], path + ".ys1");
  if (o.contains("ys2")) p.ys2 = parse_ys(o["ys2"], path + ".ys2");
  if (o.contains("pin")) p.pin = parse_pin(o["pin"], path + ".pin");
  return p;
}

AngleParamTable parse_angle_table(const json& o, const std::string& path) {
  if (o.is_string()) {
    const std::string name = o.get<std::string>();
    if (name == "default") return default_angle_table();
    fail(path, "unknown table name '" + name + "'");
  }
  check_keys(o, path, {"normal_incidence", "theta_deg", "samples"});
  if (o.contains("normal_incidence")) {
    return AngleParamTable::normal_incidence(
        parse_params(o["normal_incidence"], path + ".normal_incidence"));
  }
  if (!o.contains("theta_deg") || !o.contains("samples")) {
    fail(path, "needs theta_deg and samples");
  }
  AngleParamTable t;
  for (double d : get_num_array(o["theta_deg"], path + ".theta_deg")) {
    t.theta.push_back(deg_to_rad(d));
  }
  t.phi = {0.0};
  const json& samples = o["samples"];
  if (!samples.is_array()) fail(path + ".samples", "expected an array");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    t.samples.push_back(
        parse_params(samples[i], path + ".samples[" + std::to_string(i) + "]"));
  }
  t.validate();
  return t;
}

ArrayLayout parse_layout(const json& o, const std::string& path) {
  check_keys(o, path,
             {"rows", "cols", "pitch_col_cm", "pitch_row_cm", "center_m",
              "active"});
  ArrayLayout l;
  if (!o.contains("rows") || !o.contains("cols")) fail(path, "needs rows, cols");
  l.rows = get_int(o["rows"], path + ".rows");
  l.cols = get_int(o["cols"], path + ".cols");
  l.pitch_col = o.contains("pitch_col_cm")
                    ? get_num(o["pitch_col_cm"], path + ".pitch_col_cm") * 1e-2
                    : 0.0142;
  l.pitch_row = o.contains("pitch_row_cm")
                    ? get_num(o["pitch_row_cm"], path + ".pitch_row_cm") * 1e-2
                    : 0.0287;
  if (o.contains("center_m")) l.center = get_vec3(o["center_m"], path + ".center_m");
  if (o.contains("active")) {
    for (double v : get_num_array(o["active"], path + ".active")) {
      l.active.push_back(v != 0.0 ? 1 : 0);
    }
  }
  l.validate();
  return l;
}

GroupConfiguration parse_grouping(const json& o, const std::string& path,
                                  const ArrayLayout& layout) {
  check_keys(o, path, {"mode", "block_rows", "block_cols", "num_groups", "map"});
  const std::string mode =
      o.contains("mode") ? get_str(o["mode"], path + ".mode") : "uniform";
  GroupConfiguration c;
  if (mode == "rows") {
    c = GroupConfiguration::rows(layout);
  } else if (mode == "uniform") {
    c = GroupConfiguration::uniform(layout);
  } else if (mode == "blocks") {
    if (!o.contains("block_rows") || !o.contains("block_cols")) {
      fail(path, "blocks mode needs block_rows and block_cols");
    }
    c = GroupConfiguration::blocks(layout,
                                   get_int(o["block_rows"], path + ".block_rows"),
                                   get_int(o["block_cols"], path + ".block_cols"));
  } else if (mode == "chunks") {
    if (!o.contains("num_groups")) fail(path, "chunks mode needs num_groups");
    const int m = get_int(o["num_groups"], path + ".num_groups");
    if (m < 1 || m > layout.count()) fail(path + ".num_groups", "out of range");
    c.num_groups = m;
    c.group_of.resize(static_cast<std::size_t>(layout.count()));
    for (int e = 0; e < layout.count(); ++e) {
      c.group_of[static_cast<std::size_t>(e)] =
          static_cast<int>(static_cast<long long>(e) * m / layout.count());
    }
    c.s.assign(static_cast<std::size_t>(m), 0);
  } else if (mode == "map") {
    if (!o.contains("map") || !o.contains("num_groups")) {
      fail(path, "map mode needs map and num_groups");
    }
    c.num_groups = get_int(o["num_groups"], path + ".num_groups");
    for (double g : get_num_array(o["map"], path + ".map")) {
      c.group_of.push_back(static_cast<int>(g));
    }
    c.s.assign(static_cast<std::size_t>(c.num_groups), 0);
  } else {
    fail(path + ".mode", "unknown grouping mode '" + mode + "'");
  }
  c.validate(layout);
  return c;
}

LinkBudget parse_budget(const json& o, const std::string& path) {
  check_keys(o, path,
             {"noise_dbm", "max_tx_power_mw", "rf_chain_gain_db",
              "pathloss_exponent", "tx_gain_dbi", "rx_gain_dbi",
              "rx_phase_deg"});
  LinkBudget b;
  if (o.contains("noise_dbm")) {
    b.noise_w = dbm_to_w(get_num(o["noise_dbm"], path + ".noise_dbm"));
  }
  if (o.contains("max_tx_power_mw")) {
    b.p_t = get_num(o["max_tx_power_mw"], path + ".max_tx_power_mw") * 1e-3;
  }
  if (o.contains("rf_chain_gain_db")) {
    const json& g = o["rf_chain_gain_db"];
    b.rf_chain_gain.clear();
    if (g.is_array()) {
      for (double db : get_num_array(g, path + ".rf_chain_gain_db")) {
        b.rf_chain_gain.emplace_back(std::pow(10.0, db / 20.0), 0.0);
      }
    } else {
      b.rf_chain_gain.emplace_back(
          std::pow(10.0, get_num(g, path + ".rf_chain_gain_db") / 20.0), 0.0);
    }
  }
  if (o.contains("pathloss_exponent")) {
    b.pathloss_exponent = get_num(o["pathloss_exponent"], path + ".pathloss_exponent");
  }
  if (o.contains("tx_gain_dbi")) {
    b.tx_gain_dbi = get_num(o["tx_gain_dbi"], path + ".tx_gain_dbi");
  }
  if (o.contains("rx_gain_dbi")) {
    b.rx_gain_dbi = get_num(o["rx_gain_dbi"], path + ".rx_gain_dbi");
  }
  if (o.contains("rx_phase_deg")) {
    for (double d : get_num_array(o["rx_phase_deg"], path + ".rx_phase_deg")) {
      b.rx_phase_rad.push_back(deg_to_rad(d));
    }
  }
  b.validate();
  return b;
}

ProblemConfig parse_problem(const json& o, const std::string& path) {
  check_keys(o, path,
             {"objective", "solver", "sinr_threshold_db", "interference",
              "max_iterations", "annealing"});
  ProblemConfig p;
  if (o.contains("objective")) {
    const std::string s = get_str(o["objective"], path + ".objective");
    if (s == "min_rate") p.objective = Objective::MinRate;
    else if (s == "sum_rate") p.objective = Objective::SumRate;
    else fail(path + ".objective", "unknown objective '" + s + "'");
  }
  if (o.contains("solver")) {
    const std::string s = get_str(o["solver"], path + ".solver");
    if (s == "exhaustive") p.solver = SolverKind::Exhaustive;
    else if (s == "alternating") p.solver = SolverKind::Alternating;
    else if (s == "annealing") p.solver = SolverKind::Annealing;
    else fail(path + ".solver", "unknown solver '" + s + "'");
  }
  if (o.contains("sinr_threshold_db")) {
    p.gamma0 = std::pow(
        10.0, get_num(o["sinr_threshold_db"], path + ".sinr_threshold_db") / 10.0);
  }
  if (o.contains("interference")) {
    const std::string s = get_str(o["interference"], path + ".interference");
    if (s == "paper") p.interference = InterferenceModel::PaperText;
    else if (s == "physical") p.interference = InterferenceModel::Physical;
    else fail(path + ".interference", "unknown interference model '" + s + "'");
  }
  if (o.contains("max_iterations")) {
    p.max_iterations = get_int(o["max_iterations"], path + ".max_iterations");
  }
  if (o.contains("annealing")) {
    const json& a = o["annealing"];
    check_keys(a, path + ".annealing", {"steps", "t0", "cooling"});
    if (a.contains("steps")) p.annealing.steps = get_int(a["steps"], path + ".annealing.steps");
    if (a.contains("t0")) p.annealing.t0 = get_num(a["t0"], path + ".annealing.t0");
    if (a.contains("cooling")) p.annealing.cooling = get_num(a["cooling"], path + ".annealing.cooling");
  }
  return p;
}

} // namespace

std::vector<double> FrequencySweep::grid() const {
  validate();
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    g[static_cast<std::size_t>(i)] =
        points == 1 ? start_hz
                    : start_hz + (stop_hz - start_hz) * i / (points - 1);
  }
  return g;
}

void FrequencySweep::validate() const {
  if (points < 1) throw ConfigError("scenario: frequency sweep needs points >= 1");
  if (!(start_hz > 0.0) || !(stop_hz >= start_hz)) {
    throw ConfigError("scenario: bad frequency sweep bounds");
  }
}

std::vector<double> PatternSweep::grid() const {
  validate();
  std::vector<double> g;
  for (double a = start_deg; a <= stop_deg + 1e-9; a += step_deg) g.push_back(a);
  return g;
}

void PatternSweep::validate() const {
  if (!(step_deg > 0.0) || !(stop_deg >= start_deg)) {
    throw ConfigError("scenario: bad pattern sweep");
  }
}

AngleParamTable Scenario::effective_table() const {
  if (model.angle_dependence) return angle_table;
  AngleParamTable flat = angle_table;
  for (auto& s : flat.samples) s = angle_table.samples.front();
  return flat;
}

ChannelOptions Scenario::channel_options() const {
  ChannelOptions o;
  o.direct_path = model.direct_path;
  return o;
}

Scenario parse_scenario(const std::string& json_text, const std::string& name) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("scenario: " + name + ": " + e.what());
  }
  check_keys(root, name,
             {"seed", "constants", "angle_table", "states", "layout",
              "grouping", "tx", "rx", "budget", "problem", "model", "sweeps",
              "testbed", "outputs"});
  Scenario sc;
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned()) fail(name + ".seed", "expected an unsigned integer");
    sc.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("constants")) {
    const json& c = root["constants"];
    check_keys(c, name + ".constants", {"center_frequency_ghz"});
    if (c.contains("center_frequency_ghz")) {
      sc.center_frequency_hz =
          get_num(c["center_frequency_ghz"], name + ".constants.center_frequency_ghz") * 1e9;
    }
  }
  sc.budget.freq_hz = sc.center_frequency_hz;
  sc.angle_table = root.contains("angle_table")
                       ? parse_angle_table(root["angle_table"], name + ".angle_table")
                       : default_angle_table();
  if (root.contains("states")) {
    const json& st = root["states"];
    check_keys(st, name + ".states", {"diodes_per_layer"});
    if (st.contains("diodes_per_layer")) {
      sc.diodes_per_layer = get_int(st["diodes_per_layer"], name + ".states.diodes_per_layer");
      if (sc.diodes_per_layer < 1) fail(name + ".states.diodes_per_layer", "must be >= 1");
    }
  }
  if (root.contains("layout")) {
    sc.layout = parse_layout(root["layout"], name + ".layout");
    sc.grouping = root.contains("grouping")
                      ? parse_grouping(root["grouping"], name + ".grouping", sc.layout)
                      : GroupConfiguration::uniform(sc.layout);
  } else if (root.contains("grouping")) {
    fail(name + ".grouping", "grouping without a layout");
  }
  if (root.contains("tx")) {
    const json& txs = root["tx"];
    if (!txs.is_array()) fail(name + ".tx", "expected an array");
    for (std::size_t i = 0; i < txs.size(); ++i) {
      const std::string p = name + ".tx[" + std::to_string(i) + "]";
      check_keys(txs[i], p, {"position_m", "gain_dbi"});
      TxAntenna t;
      if (!txs[i].contains("position_m")) fail(p, "needs position_m");
      t.position = get_vec3(txs[i]["position_m"], p + ".position_m");
      if (txs[i].contains("gain_dbi")) {
        t.gain_dbi = get_num(txs[i]["gain_dbi"], p + ".gain_dbi");
      }
      sc.tx.push_back(t);
    }
  }
  if (root.contains("rx")) {
    const json& rxs = root["rx"];
    if (!rxs.is_array()) fail(name + ".rx", "expected an array");
    for (std::size_t i = 0; i < rxs.size(); ++i) {
      const std::string p = name + ".rx[" + std::to_string(i) + "]";
      check_keys(rxs[i], p, {"position_m"});
      if (!rxs[i].contains("position_m")) fail(p, "needs position_m");
      sc.rx.push_back(get_vec3(rxs[i]["position_m"], p + ".position_m"));
    }
  }
  if (root.contains("budget")) {
    sc.budget = parse_budget(root["budget"], name + ".budget");
    sc.budget.freq_hz = sc.center_frequency_hz;
  }
  if (root.contains("problem")) {
    sc.problem = parse_problem(root["problem"], name + ".problem");
  }
  if (root.contains("model")) {
    const json& m = root["model"];
    check_keys(m, name + ".model", {"direct_path", "angle_dependence"});
    if (m.contains("direct_path")) {
      sc.model.direct_path = get_bool(m["direct_path"], name + ".model.direct_path");
    }
    if (m.contains("angle_dependence")) {
      sc.model.angle_dependence =
          get_bool(m["angle_dependence"], name + ".model.angle_dependence");
    }
  }
  if (root.contains("sweeps")) {
    const json& sw = root["sweeps"];
    check_keys(sw, name + ".sweeps",
               {"frequency", "incidence_theta_deg", "pattern", "size_scale"});
    if (sw.contains("frequency")) {
      const json& f = sw["frequency"];
      check_keys(f, name + ".sweeps.frequency", {"start_ghz", "stop_ghz", "points"});
      if (f.contains("start_ghz")) sc.frequency.start_hz = get_num(f["start_ghz"], name + ".sweeps.frequency.start_ghz") * 1e9;
      if (f.contains("stop_ghz")) sc.frequency.stop_hz = get_num(f["stop_ghz"], name + ".sweeps.frequency.stop_ghz") * 1e9;
      if (f.contains("points")) sc.frequency.points = get_int(f["points"], name + ".sweeps.frequency.points");
      sc.frequency.validate();
    }
    if (sw.contains("incidence_theta_deg")) {
      sc.incidence_theta_deg =
          get_num_array(sw["incidence_theta_deg"], name + ".sweeps.incidence_theta_deg");
      if (sc.incidence_theta_deg.empty()) {
        fail(name + ".sweeps.incidence_theta_deg", "must not be empty");
      }
    }
    if (sw.contains("pattern")) {
      const json& p = sw["pattern"];
      check_keys(p, name + ".sweeps.pattern",
                 {"start_deg", "stop_deg", "step_deg", "targets_deg"});
      if (p.contains("start_deg")) sc.pattern.start_deg = get_num(p["start_deg"], name + ".sweeps.pattern.start_deg");
      if (p.contains("stop_deg")) sc.pattern.stop_deg = get_num(p["stop_deg"], name + ".sweeps.pattern.stop_deg");
      if (p.contains("step_deg")) sc.pattern.step_deg = get_num(p["step_deg"], name + ".sweeps.pattern.step_deg");
      if (p.contains("targets_deg")) {
        sc.pattern.targets_deg = get_num_array(p["targets_deg"], name + ".sweeps.pattern.targets_deg");
      }
      sc.pattern.validate();
    }
    if (sw.contains("size_scale")) {
      for (double v : get_num_array(sw["size_scale"], name + ".sweeps.size_scale")) {
        const int k = static_cast<int>(v);
        if (k < 1 || v != k) fail(name + ".sweeps.size_scale", "expected positive integers");
        sc.size_scale.push_back(k);
      }
    }
  }
  if (root.contains("testbed")) {
    const json& t = root["testbed"];
    check_keys(t, name + ".testbed", {"samples", "runs", "noise_dbm"});
    if (t.contains("samples")) {
      const int u = get_int(t["samples"], name + ".testbed.samples");
      if (u < 2) fail(name + ".testbed.samples", "U must be >= 2");
      sc.testbed.samples = static_cast<std::size_t>(u);
    }
    if (t.contains("runs")) sc.testbed.runs = get_int(t["runs"], name + ".testbed.runs");
    if (t.contains("noise_dbm")) {
      sc.testbed.noise_w = dbm_to_w(get_num(t["noise_dbm"], name + ".testbed.noise_dbm"));
    }
  }
  if (root.contains("outputs")) {
    const json& o = root["outputs"];
    check_keys(o, name + ".outputs", {"prefix"});
    if (o.contains("prefix")) sc.output_prefix = get_str(o["prefix"], name + ".outputs.prefix");
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("scenario: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

} // namespace iosim

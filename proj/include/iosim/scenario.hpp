#pragma once

#include <optional>
#include <string>

#include "iosim/beamforming.hpp"

// Scenario configuration: one JSON file drives every CLI subcommand. The
// schema is total — unknown keys anywhere are configuration errors.

namespace iosim {

struct FrequencySweep {
  double start_hz = 3.0e9;
  double stop_hz = 4.2e9;
  int points = 241;

  std::vector<double> grid() const;
  void validate() const;
};

struct PatternSweep {
  double start_deg = -180.0;
  double stop_deg = 179.0;
  double step_deg = 1.0;
  std::vector<double> targets_deg;

  std::vector<double> grid() const;
  void validate() const;
};

struct ModelOptions {
  bool direct_path = false;
  // false substitutes the normal-incidence parameters at every angle
  bool angle_dependence = true;
};

struct TestbedConfig {
  std::size_t samples = 10000;   // U
  int runs = 1;
  std::optional<double> noise_w; // override budget noise for the experiment
};

struct ProblemConfig {
  Objective objective = Objective::MinRate;
  SolverKind solver = SolverKind::Exhaustive;
  double gamma0 = 3.981071705534972; // 6 dB
  InterferenceModel interference = InterferenceModel::PaperText;
  int max_iterations = 200;
  AnnealingSchedule annealing;
};

struct Scenario {
  std::uint64_t seed = 0;
  double center_frequency_hz = 3.6e9;
  AngleParamTable angle_table;
  int diodes_per_layer = 1;
  ArrayLayout layout;
  GroupConfiguration grouping;
  std::vector<TxAntenna> tx;
  std::vector<Vec3> rx;
  LinkBudget budget;
  ProblemConfig problem;
  ModelOptions model;
  FrequencySweep frequency;
  std::vector<double> incidence_theta_deg{0.0};
  PatternSweep pattern;
  std::vector<int> size_scale; // optimize size sweep, multiples of the layout
  TestbedConfig testbed;
  std::string output_prefix = "run";

  // Table after applying the angle-dependence switch.
  AngleParamTable effective_table() const;
  ChannelOptions channel_options() const;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text, const std::string& name);

} // namespace iosim

#pragma once

#include <cstdint>
#include <string>

#include "iosim/channel_rate.hpp"

// Joint digital/analog beamforming: per-group binary IOS states plus the BS
// digital beamformer, under SINR, per-antenna power, and discrete-state
// constraints.

namespace iosim {

enum class Objective { MinRate, SumRate };
enum class SolverKind { Exhaustive, Alternating, Annealing };

struct AnnealingSchedule {
  int steps = 4000;
  double t0 = 0.5;      // initial temperature, in objective units
  double cooling = 0.997; // geometric factor per step
};

struct ProblemSpec {
  ChannelSet channels;
  LinkBudget budget;
  Objective objective = Objective::MinRate;
  double gamma0 = 3.981071705534972; // 6 dB, linear
  SolverKind solver = SolverKind::Exhaustive;
  InterferenceModel interference = InterferenceModel::PaperText;
  std::uint64_t seed = 0;
  int max_iterations = 200; // alternating sweeps cap
  std::vector<std::uint8_t> initial_s; // empty = all groups in state 0
  AnnealingSchedule annealing;

  void validate() const;
};

struct Violation {
  std::string constraint; // "sinr" | "power" | "state"
  std::size_t index = 0;
  double margin = 0.0; // amount by which the constraint is exceeded
};

struct Solution {
  std::vector<std::uint8_t> s;
  std::vector<cplx> v; // K x J, k-major
  RateReport report;
  double objective_value = 0.0;
  bool feasible = false;
  bool zf_fallback = false;
  std::vector<Violation> violations;
  std::vector<double> trace; // objective per accepted iterate
};

// Zero-forcing directions scaled so the binding antenna meets P_T exactly;
// matched-filter fallback (flagged) when the Gram matrix is singular.
// Throws CapabilityError when J > K.
std::vector<cplx> digital_beamformer(const std::vector<cplx>& h,
                                     std::size_t num_tx, std::size_t num_rx,
                                     const LinkBudget& budget,
                                     bool* used_fallback = nullptr);

Solution exhaustive_ios(const ProblemSpec& spec);
Solution alternating_opt(const ProblemSpec& spec);
Solution annealing_opt(const ProblemSpec& spec);

std::vector<Violation> feasibility_check(const Solution& sol,
                                         const ProblemSpec& spec);

Solution solve(const ProblemSpec& spec);

} // namespace iosim

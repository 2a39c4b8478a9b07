#pragma once

#include <vector>

#include "iosim/array_model.hpp"

// Cascaded tx -> element -> rx channels, the grouped affine channel
// decomposition, and per-UE SINR/rate.

namespace iosim {

// 3 dBi rx antenna + 15.07 dB LNA as a linear amplitude, zero phase.
cplx default_rf_chain_gain();

struct LinkBudget {
  double tx_gain_dbi = 0.0;
  double rx_gain_dbi = 0.0;
  // RF chain gain C_j per UE; single entry broadcasts to all UEs. Default is
  // the measured-equivalent 3 dBi rx antenna + 15.07 dB LNA, zero phase.
  std::vector<cplx> rf_chain_gain{default_rf_chain_gain()};
  double noise_w = 2.51188643150958e-13; // -96 dBm
  double pathloss_exponent = 2.0;
  double freq_hz = 3.6e9;
  double p_t = 0.2; // per-antenna power cap, W
  // residual static phase offset per rx chain, radians; empty = zeros
  std::vector<double> rx_phase_rad;

  void validate() const;
  cplx c_for(std::size_t j) const;
  double lambda() const { return kSpeedOfLight / freq_hz; }
};

struct ChannelOptions {
  bool direct_path = false;   // tx -> rx line-of-sight term
  bool far_field_tx = false;  // one shared incidence angle per tx
};

// Channel matrix h_{k,j} stored k-major: h[k * num_rx + j].
struct ChannelSet {
  std::size_t num_tx = 0, num_rx = 0, num_groups = 0;
  std::vector<cplx> base;                // all groups in state 0
  std::vector<std::vector<cplx>> deltas; // per group m

  void validate() const;
};

// Interference indexing in the rate expression: the paper's text sums
// |C_j sum_k V_{k,j'} h_{k,j'}|^2 (channel of UE j'); the physical receive
// chain of UE j would use h_{k,j}.
enum class InterferenceModel { PaperText, Physical };

struct RateReport {
  std::vector<double> sinr; // linear
  std::vector<double> rate; // bit/s/Hz
  double min_rate = 0.0;
  double sum_rate = 0.0;
};

// Sum over active elements of the two-hop Friis cascade with the per-element
// reflection or transmission coefficient; optional direct path.
cplx cascaded_channel(const ArrayLayout& layout,
                      const GroupConfiguration& config,
                      const AngleParamTable& table, const LinkBudget& budget,
                      const Vec3& tx, const Vec3& rx,
                      const ChannelOptions& options = {},
                      int diodes_per_layer = 1);

// base at all-zero states; delta m = (only group m on) - base.
ChannelSet group_deltas(const ArrayLayout& layout,
                        const GroupConfiguration& grouping,
                        const AngleParamTable& table, const LinkBudget& budget,
                        const std::vector<Vec3>& tx,
                        const std::vector<Vec3>& rx,
                        const ChannelOptions& options = {},
                        int diodes_per_layer = 1);

// base + sum_m s_m * delta_m, exact linear form.
std::vector<cplx> assemble_channel(const ChannelSet& cs,
                                   const std::vector<std::uint8_t>& s);

// v and h are K x J, k-major.
RateReport sinr_and_rate(const std::vector<cplx>& v, const std::vector<cplx>& h,
                         std::size_t num_tx, std::size_t num_rx,
                         const LinkBudget& budget,
                         InterferenceModel model = InterferenceModel::PaperText);

} // namespace iosim

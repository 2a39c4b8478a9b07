#pragma once

#include <iosfwd>
#include <random>

#include "iosim/channel_rate.hpp"

// Virtual measurement loop: received-signal synthesis, channel-parameter
// extraction by precoder zeroing, group-delta probing, and noise-variance
// estimation against known ground truth.

namespace iosim {

struct SampleRecord {
  int run_id = 0;
  std::vector<std::uint8_t> s;
  int v_snapshot = 0;
  std::size_t rx = 0;
  cplx y{0.0, 0.0};
};

// Optional sample sink; one line per sample in the record-file dump.
struct MeasurementLog {
  std::vector<SampleRecord> records;
  int next_run_id = 0;

  void dump(std::ostream& os) const;
};

// y_j = C_j e^{j phase_j} sum_{j'} sum_k V_{k,j'} h_{.,j'} x_{j'} + n_j with
// circular complex Gaussian noise of total variance sigma^2. The channel
// index in the cross-UE term follows the chosen interference model.
std::vector<cplx> received_signal(const ChannelSet& cs,
                                  const std::vector<std::uint8_t>& s,
                                  const std::vector<cplx>& v,
                                  const std::vector<cplx>& x,
                                  const LinkBudget& budget,
                                  std::mt19937_64& rng,
                                  InterferenceModel model =
                                      InterferenceModel::PaperText,
                                  MeasurementLog* log = nullptr);

// Unbiased sum |y_u - mean|^2 / (U - 1); throws ConfigError for U < 2.
struct NoiseEstimate {
  double sigma2_hat = 0.0;
  std::size_t u = 0;
};
NoiseEstimate estimate_noise(const std::vector<cplx>& samples);

// Per (k,j): zero all other precoder entries, pilot x_j = 1, average U
// samples, divide by V_{k,j}. Returns C_j h_{k,j} estimates, k-major.
struct ChannelEstimate {
  std::vector<cplx> ch; // C_j h_{k,j}
  std::size_t u = 0;
};
ChannelEstimate estimate_channel(const ChannelSet& cs,
                                 const std::vector<std::uint8_t>& s,
                                 const LinkBudget& budget, std::size_t u,
                                 std::mt19937_64& rng,
                                 MeasurementLog* log = nullptr);

// Base at all-zeros plus M one-hot measurements; deltas by subtraction.
// Estimates are divided by C_j, so a noiseless probe reproduces
// group_deltas output exactly.
ChannelSet probe_group_deltas(const ChannelSet& truth, const LinkBudget& budget,
                              std::size_t u, std::mt19937_64& rng,
                              MeasurementLog* log = nullptr);

} // namespace iosim

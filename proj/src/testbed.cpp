#include "iosim/testbed.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace iosim {

namespace {

cplx chain_gain(const LinkBudget& budget, std::size_t j) {
  cplx c = budget.c_for(j);
  if (!budget.rx_phase_rad.empty()) {
    if (j >= budget.rx_phase_rad.size()) {
      throw ConfigError("budget: rx phase offsets do not cover all UEs");
    }
    c *= std::polar(1.0, budget.rx_phase_rad[j]);
  }
  return c;
}

} // namespace

void MeasurementLog::dump(std::ostream& os) const {
  os << "run_id,config,v_snapshot,rx,re_y,im_y\n";
  char buf[64];
  for (const SampleRecord& r : records) {
    os << r.run_id << ',';
    for (std::uint8_t b : r.s) os << static_cast<int>(b);
    os << ',' << r.v_snapshot << ',' << r.rx;
    std::snprintf(buf, sizeof(buf), ",%.17g,%.17g\n", r.y.real(), r.y.imag());
    os << buf;
  }
}

std::vector<cplx> received_signal(const ChannelSet& cs,
                                  const std::vector<std::uint8_t>& s,
                                  const std::vector<cplx>& v,
                                  const std::vector<cplx>& x,
                                  const LinkBudget& budget,
                                  std::mt19937_64& rng,
                                  InterferenceModel model,
                                  MeasurementLog* log) {
  if (budget.noise_w < 0.0) {
    throw ConfigError("testbed: noise variance must be >= 0");
  }
  const std::size_t K = cs.num_tx, J = cs.num_rx;
  if (v.size() != K * J) throw ShapeError("received_signal: v must be K x J");
  if (x.size() != J) throw ShapeError("received_signal: one pilot per UE");
  const std::vector<cplx> h = assemble_channel(cs, s);

  std::normal_distribution<double> gauss(0.0, std::sqrt(budget.noise_w / 2.0));
  std::vector<cplx> y(J);
  for (std::size_t j = 0; j < J; ++j) {
    const cplx cj = chain_gain(budget, j);
    cplx acc{0.0, 0.0};
    for (std::size_t jp = 0; jp < J; ++jp) {
      const std::size_t hj =
          (jp == j || model == InterferenceModel::Physical) ? j : jp;
      cplx beam{0.0, 0.0};
      for (std::size_t k = 0; k < K; ++k) {
        beam += v[k * J + jp] * h[k * J + hj];
      }
      acc += cj * beam * x[jp];
    }
    y[j] = acc + cplx(gauss(rng), gauss(rng));
  }
  if (log) {
    for (std::size_t j = 0; j < J; ++j) {
      log->records.push_back({log->next_run_id, s, log->next_run_id, j, y[j]});
    }
  }
  return y;
}

NoiseEstimate estimate_noise(const std::vector<cplx>& samples) {
  if (samples.size() < 2) {
    throw ConfigError("estimate_noise: need at least 2 samples");
  }
  cplx mean{0.0, 0.0};
  for (const cplx& y : samples) mean += y;
  mean /= static_cast<double>(samples.size());
  double acc = 0.0;
  for (const cplx& y : samples) acc += std::norm(y - mean);
  return {acc / static_cast<double>(samples.size() - 1), samples.size()};
}

ChannelEstimate estimate_channel(const ChannelSet& cs,
                                 const std::vector<std::uint8_t>& s,
                                 const LinkBudget& budget, std::size_t u,
                                 std::mt19937_64& rng, MeasurementLog* log) {
  if (u < 1) throw ConfigError("estimate_channel: need at least 1 sample");
  const std::size_t K = cs.num_tx, J = cs.num_rx;
  ChannelEstimate est;
  est.u = u;
  est.ch.assign(K * J, cplx{0.0, 0.0});
  std::vector<cplx> v(K * J, cplx{0.0, 0.0});
  std::vector<cplx> x(J, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t j = 0; j < J; ++j) {
      v.assign(K * J, cplx{0.0, 0.0});
      v[k * J + j] = cplx{1.0, 0.0};
      x.assign(J, cplx{0.0, 0.0});
      x[j] = cplx{1.0, 0.0};
      cplx acc{0.0, 0.0};
      for (std::size_t i = 0; i < u; ++i) {
        acc += received_signal(cs, s, v, x, budget, rng,
                               InterferenceModel::PaperText, log)[j];
      }
      est.ch[k * J + j] = acc / static_cast<double>(u);
      if (log) ++log->next_run_id;
    }
  }
  return est;
}

ChannelSet probe_group_deltas(const ChannelSet& truth, const LinkBudget& budget,
                              std::size_t u, std::mt19937_64& rng,
                              MeasurementLog* log) {
  const std::size_t M = truth.num_groups;
  const std::size_t n = truth.num_tx * truth.num_rx;
  auto measure = [&](const std::vector<std::uint8_t>& s) {
    ChannelEstimate est = estimate_channel(truth, s, budget, u, rng, log);
    for (std::size_t k = 0; k < truth.num_tx; ++k) {
      for (std::size_t j = 0; j < truth.num_rx; ++j) {
        est.ch[k * truth.num_rx + j] /= chain_gain(budget, j);
      }
    }
    return est.ch;
  };
  ChannelSet out;
  out.num_tx = truth.num_tx;
  out.num_rx = truth.num_rx;
  out.num_groups = M;
  out.base = measure(std::vector<std::uint8_t>(M, 0));
  out.deltas.resize(M);
  for (std::size_t m = 0; m < M; ++m) {
    std::vector<std::uint8_t> s(M, 0);
    s[m] = 1;
    out.deltas[m] = measure(s);
    for (std::size_t i = 0; i < n; ++i) out.deltas[m][i] -= out.base[i];
  }
  return out;
}

} // namespace iosim

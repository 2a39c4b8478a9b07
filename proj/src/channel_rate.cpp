#include "iosim/channel_rate.hpp"

#include <algorithm>
#include <cmath>

#include "iosim/parallel.hpp"

namespace iosim {

namespace {
constexpr double kTiny = 1e-15;
}

cplx default_rf_chain_gain() {
  return {std::pow(10.0, (3.0 + 15.07) / 20.0), 0.0};
}

void LinkBudget::validate() const {
  if (!(noise_w > 0.0)) throw ConfigError("budget: noise variance must be > 0");
  if (!(p_t > 0.0)) throw ConfigError("budget: transmit power must be > 0");
  if (!(freq_hz > 0.0)) throw ConfigError("budget: carrier frequency must be > 0");
  if (rf_chain_gain.empty()) throw ConfigError("budget: rf chain gain missing");
}

cplx LinkBudget::c_for(std::size_t j) const {
  if (rf_chain_gain.size() == 1) return rf_chain_gain[0];
  if (j >= rf_chain_gain.size()) {
    throw ConfigError("budget: rf chain gain count does not cover all UEs");
  }
  return rf_chain_gain[j];
}

void ChannelSet::validate() const {
  const std::size_t n = num_tx * num_rx;
  if (base.size() != n) throw ShapeError("channel set: base size mismatch");
  if (deltas.size() != num_groups) {
    throw ShapeError("channel set: delta count mismatch");
  }
  for (const auto& d : deltas) {
    if (d.size() != n) throw ShapeError("channel set: delta size mismatch");
  }
}

cplx cascaded_channel(const ArrayLayout& layout,
                      const GroupConfiguration& config,
                      const AngleParamTable& table, const LinkBudget& budget,
                      const Vec3& tx, const Vec3& rx,
                      const ChannelOptions& options, int diodes_per_layer) {
  budget.validate();
  const double tx_side = tx.y - layout.center.y;
  const double rx_side = rx.y - layout.center.y;
  if (std::abs(tx_side) < kTiny) {
    throw GeometryError("cascaded_channel: tx on the surface plane");
  }
  if (std::abs(rx_side) < kTiny) {
    throw GeometryError("cascaded_channel: rx on the surface plane");
  }
  const bool same_side = tx_side * rx_side > 0.0;
  const double lambda = budget.lambda();
  const double beta = 2.0 * kPi / lambda;
  const double hop = lambda / (4.0 * kPi);
  const double gain = std::pow(10.0, (budget.tx_gain_dbi + budget.rx_gain_dbi) / 20.0);
  const double half_exp = 0.5 * budget.pathloss_exponent;

  IncidenceAngle shared{};
  if (options.far_field_tx) {
    const Vec3 u = tx - layout.center;
    const double d = u.norm();
    if (d < kTiny) throw GeometryError("cascaded_channel: tx at array center");
    shared.theta = std::acos(std::min(1.0, std::abs(u.y) / d));
    const double planar = std::hypot(u.x, u.z);
    shared.phi = planar < kTiny ? 0.0 : std::atan2(u.z, u.x);
    if (shared.phi < 0.0) shared.phi += 2.0 * kPi;
  }

  cplx acc{0.0, 0.0};
  for (int e = 0; e < layout.count(); ++e) {
    if (!layout.is_active(e)) continue;
    const Vec3 p = layout.element_center(e);
    const double d_tx = (tx - p).norm();
    const double d_rx = (rx - p).norm();
    if (d_tx < kTiny || d_rx < kTiny) {
      throw GeometryError("cascaded_channel: endpoint on an element");
    }
    const IncidenceAngle angle =
        options.far_field_tx ? shared : local_incidence(layout, tx, e);
    const ScatterResponse resp = element_response(
        table, config.element_state(e, diodes_per_layer), angle,
        budget.freq_hz);
    const cplx gamma = same_side ? resp.gamma_r : resp.gamma_t;
    const double amp =
        gain * hop * hop * std::pow(d_tx * d_rx, -half_exp);
    acc += amp * gamma * std::polar(1.0, -beta * (d_tx + d_rx));
  }
  if (options.direct_path) {
    const double d = (rx - tx).norm();
    if (d < kTiny) throw GeometryError("cascaded_channel: tx == rx");
    acc += gain * hop * std::pow(d, -half_exp) * std::polar(1.0, -beta * d);
  }
  return acc;
}

ChannelSet group_deltas(const ArrayLayout& layout,
                        const GroupConfiguration& grouping,
                        const AngleParamTable& table, const LinkBudget& budget,
                        const std::vector<Vec3>& tx,
                        const std::vector<Vec3>& rx,
                        const ChannelOptions& options, int diodes_per_layer) {
  if (grouping.num_groups < 1) throw ConfigError("group_deltas: M must be >= 1");
  GroupConfiguration cfg = grouping;
  cfg.s.assign(static_cast<std::size_t>(cfg.num_groups), 0);
  cfg.validate(layout); // rejects empty groups

  ChannelSet cs;
  cs.num_tx = tx.size();
  cs.num_rx = rx.size();
  cs.num_groups = static_cast<std::size_t>(grouping.num_groups);
  const std::size_t n = cs.num_tx * cs.num_rx;

  auto eval = [&](const std::vector<std::uint8_t>& s) {
    GroupConfiguration c = cfg;
    c.s = s;
    std::vector<cplx> h(n);
    for (std::size_t k = 0; k < cs.num_tx; ++k) {
      for (std::size_t j = 0; j < cs.num_rx; ++j) {
        h[k * cs.num_rx + j] = cascaded_channel(layout, c, table, budget,
                                                tx[k], rx[j], options,
                                                diodes_per_layer);
      }
    }
    return h;
  };

  cs.base = eval(cfg.s);
  cs.deltas.resize(cs.num_groups);
  parallel_for(cs.num_groups, [&](std::size_t m) {
    std::vector<std::uint8_t> s(cs.num_groups, 0);
    s[m] = 1;
    std::vector<cplx> h = eval(s);
    for (std::size_t i = 0; i < n; ++i) h[i] -= cs.base[i];
    cs.deltas[m] = std::move(h);
  });
  return cs;
}

std::vector<cplx> assemble_channel(const ChannelSet& cs,
                                   const std::vector<std::uint8_t>& s) {
  cs.validate();
  if (s.size() != cs.num_groups) {
    throw ShapeError("assemble_channel: state vector length mismatch");
  }
  std::vector<cplx> h = cs.base;
  for (std::size_t m = 0; m < cs.num_groups; ++m) {
    if (s[m] == 0) continue;
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += cs.deltas[m][i];
  }
  return h;
}

RateReport sinr_and_rate(const std::vector<cplx>& v, const std::vector<cplx>& h,
                         std::size_t num_tx, std::size_t num_rx,
                         const LinkBudget& budget, InterferenceModel model) {
  budget.validate();
  const std::size_t n = num_tx * num_rx;
  if (v.size() != n || h.size() != n) {
    throw ShapeError("sinr_and_rate: v/h must be K x J");
  }
  RateReport r;
  r.sinr.resize(num_rx);
  r.rate.resize(num_rx);
  for (std::size_t j = 0; j < num_rx; ++j) {
    const cplx cj = budget.c_for(j);
    cplx des{0.0, 0.0};
    for (std::size_t k = 0; k < num_tx; ++k) {
      des += v[k * num_rx + j] * h[k * num_rx + j];
    }
    double interference = 0.0;
    for (std::size_t jp = 0; jp < num_rx; ++jp) {
      if (jp == j) continue;
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < num_tx; ++k) {
        const std::size_t hj = model == InterferenceModel::PaperText ? jp : j;
        acc += v[k * num_rx + jp] * h[k * num_rx + hj];
      }
      interference += std::norm(cj * acc);
    }
    r.sinr[j] = std::norm(cj * des) / (budget.noise_w + interference);
    r.rate[j] = std::log2(1.0 + r.sinr[j]);
  }
  r.min_rate = r.rate.empty() ? 0.0 : *std::min_element(r.rate.begin(), r.rate.end());
  for (double x : r.rate) r.sum_rate += x;
  return r;
}

} // namespace iosim

#include "iosim/array_model.hpp"

#include <algorithm>
#include <cmath>

#include "iosim/kernels.hpp"
#include "iosim/parallel.hpp"

namespace iosim {

namespace {
constexpr double kTiny = 1e-15;
}

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 unit_vector(const Direction& d) {
  return {std::sin(d.theta) * std::cos(d.phi), std::cos(d.theta),
          std::sin(d.theta) * std::sin(d.phi)};
}

Direction direction_from_sweep(double angle_deg) {
  const double a = deg_to_rad(angle_deg);
  // (sin a, cos a, 0): theta = |a| from +y, phi = 0 (x > 0) or pi (x < 0)
  Direction d;
  d.theta = std::abs(a);
  d.phi = a >= 0.0 ? 0.0 : kPi;
  return d;
}

void ArrayLayout::validate() const {
  if (rows < 1 || cols < 1) throw ConfigError("layout: rows and cols must be >= 1");
  if (!(pitch_col > 0.0) || !(pitch_row > 0.0)) {
    throw ConfigError("layout: element pitch must be > 0");
  }
  if (!active.empty() && active.size() != static_cast<std::size_t>(count())) {
    throw ConfigError("layout: active mask size mismatch");
  }
  if (active_count() < 1) throw ConfigError("layout: no active elements");
}

bool ArrayLayout::is_active(int element) const {
  return active.empty() || active[static_cast<std::size_t>(element)] != 0;
}

int ArrayLayout::active_count() const {
  if (active.empty()) return count();
  int n = 0;
  for (std::uint8_t a : active) n += a != 0;
  return n;
}

Vec3 ArrayLayout::element_center(int element) const {
  const int r = element / cols;
  const int c = element % cols;
  return {center.x + (c - 0.5 * (cols - 1)) * pitch_col, center.y,
          center.z + (0.5 * (rows - 1) - r) * pitch_row};
}

void GroupConfiguration::validate(const ArrayLayout& layout) const {
  if (group_of.size() != static_cast<std::size_t>(layout.count())) {
    throw ConfigError("grouping: map size does not match layout");
  }
  if (num_groups < 1) throw ConfigError("grouping: need at least one group");
  if (s.size() != static_cast<std::size_t>(num_groups)) {
    throw ConfigError("grouping: state vector size does not match group count");
  }
  std::vector<int> members(static_cast<std::size_t>(num_groups), 0);
  for (int e = 0; e < layout.count(); ++e) {
    if (!layout.is_active(e)) continue;
    const int g = group_of[static_cast<std::size_t>(e)];
    if (g < 0 || g >= num_groups) {
      throw ConfigError("grouping: group index out of range");
    }
    ++members[static_cast<std::size_t>(g)];
  }
  for (int g = 0; g < num_groups; ++g) {
    if (members[static_cast<std::size_t>(g)] == 0) {
      throw ConfigError("grouping: empty group");
    }
  }
}

ElementState GroupConfiguration::element_state(int element,
                                               int diodes_per_layer) const {
  const int g = group_of[static_cast<std::size_t>(element)];
  return make_element_state(s[static_cast<std::size_t>(g)] != 0,
                            diodes_per_layer);
}

GroupConfiguration GroupConfiguration::rows(const ArrayLayout& layout) {
  GroupConfiguration c;
  c.num_groups = layout.rows;
  c.group_of.resize(static_cast<std::size_t>(layout.count()));
  for (int e = 0; e < layout.count(); ++e) {
    c.group_of[static_cast<std::size_t>(e)] = e / layout.cols;
  }
  c.s.assign(static_cast<std::size_t>(c.num_groups), 0);
  return c;
}

GroupConfiguration GroupConfiguration::blocks(const ArrayLayout& layout,
                                              int block_rows, int block_cols) {
  if (block_rows < 1 || block_cols < 1 || layout.rows % block_rows != 0 ||
      layout.cols % block_cols != 0) {
    throw ConfigError("grouping: block size must divide the layout");
  }
  const int gcols = layout.cols / block_cols;
  GroupConfiguration c;
  c.num_groups = (layout.rows / block_rows) * gcols;
  c.group_of.resize(static_cast<std::size_t>(layout.count()));
  for (int e = 0; e < layout.count(); ++e) {
    const int r = e / layout.cols, col = e % layout.cols;
    c.group_of[static_cast<std::size_t>(e)] =
        (r / block_rows) * gcols + col / block_cols;
  }
  c.s.assign(static_cast<std::size_t>(c.num_groups), 0);
  return c;
}

GroupConfiguration GroupConfiguration::uniform(const ArrayLayout& layout) {
  GroupConfiguration c;
  c.num_groups = 1;
  c.group_of.assign(static_cast<std::size_t>(layout.count()), 0);
  c.s.assign(1, 0);
  return c;
}

void BeamPattern::validate() const {
  if (sweep_deg.size() < 8) throw ConfigError("pattern: need >= 8 samples");
  if (directions.size() != sweep_deg.size()) {
    throw ShapeError("pattern: direction/sweep size mismatch");
  }
  for (std::size_t i = 1; i < sweep_deg.size(); ++i) {
    if (!(sweep_deg[i] > sweep_deg[i - 1])) {
      throw ConfigError("pattern: sweep must be strictly increasing");
    }
  }
  if (kind == PatternKind::Field) {
    if (field.size() != sweep_deg.size()) {
      throw ShapeError("pattern: field size mismatch");
    }
  } else {
    if (power.size() != sweep_deg.size()) {
      throw ShapeError("pattern: power size mismatch");
    }
    for (double p : power) {
      if (!(p >= 0.0)) throw ConfigError("pattern: negative power sample");
    }
  }
}

IncidenceAngle local_incidence(const ArrayLayout& layout, const Vec3& tx,
                               int element) {
  const Vec3 u = tx - layout.element_center(element);
  const double d = u.norm();
  if (d < kTiny) throw GeometryError("local_incidence: zero-length ray");
  double ct = std::abs(u.y) / d;
  ct = std::min(1.0, ct);
  IncidenceAngle a;
  a.theta = std::acos(ct);
  const double planar = std::hypot(u.x, u.z);
  if (planar < kTiny) {
    a.phi = 0.0;
  } else {
    a.phi = std::atan2(u.z, u.x);
    if (a.phi < 0.0) a.phi += 2.0 * kPi;
  }
  return a;
}

BeamPattern reference_pattern(const ArrayLayout& layout,
                              const GroupConfiguration& config,
                              const AngleParamTable& table, const TxAntenna& tx,
                              const std::vector<double>& sweep_deg,
                              double freq_hz, int diodes_per_layer,
                              const ModelConstants& constants) {
  layout.validate();
  config.validate(layout);
  const double tx_side = tx.position.y - layout.center.y;
  if (std::abs(tx_side) < kTiny) {
    throw GeometryError("reference_pattern: tx on the surface plane");
  }
  const double lambda = constants.c0 / freq_hz;
  const double beta = 2.0 * kPi / lambda;
  const double amp_gain = std::pow(10.0, tx.gain_dbi / 20.0);

  // Per-element incident amplitude and the two side-resolved weights.
  std::vector<double> wr_re, wr_im, wt_re, wt_im, px, py, pz;
  for (int e = 0; e < layout.count(); ++e) {
    if (!layout.is_active(e)) continue;
    const Vec3 p = layout.element_center(e) - layout.center;
    const Vec3 ray = tx.position - layout.element_center(e);
    const double d = ray.norm();
    if (d < kTiny) throw GeometryError("reference_pattern: tx on an element");
    const cplx a_inc = amp_gain * lambda / (4.0 * kPi * d) *
                       std::polar(1.0, -beta * d);
    const IncidenceAngle angle = local_incidence(layout, tx.position, e);
    const ScatterResponse resp = element_response(
        table, config.element_state(e, diodes_per_layer), angle, freq_hz,
        constants);
    const cplx wr = a_inc * resp.gamma_r;
    const cplx wt = a_inc * resp.gamma_t;
    wr_re.push_back(wr.real());
    wr_im.push_back(wr.imag());
    wt_re.push_back(wt.real());
    wt_im.push_back(wt.imag());
    px.push_back(p.x);
    py.push_back(p.y);
    pz.push_back(p.z);
  }

  BeamPattern out;
  out.kind = PatternKind::Field;
  out.sweep_deg = sweep_deg;
  out.directions.resize(sweep_deg.size());
  out.field.resize(sweep_deg.size());
  const std::size_t n = px.size();
  parallel_for(sweep_deg.size(), [&](std::size_t i) {
    const Direction dir = direction_from_sweep(sweep_deg[i]);
    const Vec3 u = unit_vector(dir);
    const bool same_side = u.y * tx_side >= 0.0;
    const double* re = same_side ? wr_re.data() : wt_re.data();
    const double* im = same_side ? wr_im.data() : wt_im.data();
    out.directions[i] = dir;
    out.field[i] = kernels::steering_sum(re, im, px.data(), py.data(),
                                         pz.data(), -beta * u.x, -beta * u.y,
                                         -beta * u.z, n);
  });
  out.validate();
  return out;
}

BeamPattern beam_pattern(const std::vector<BeamPattern>& refs,
                         const std::vector<cplx>& v_column) {
  if (refs.empty()) throw ShapeError("beam_pattern: no reference patterns");
  if (v_column.size() != refs.size()) {
    throw ShapeError("beam_pattern: v column size mismatch");
  }
  for (const BeamPattern& r : refs) {
    if (r.kind != PatternKind::Field) {
      throw ShapeError("beam_pattern: reference patterns must be fields");
    }
    if (r.sweep_deg != refs.front().sweep_deg) {
      throw ShapeError("beam_pattern: sweep mismatch between references");
    }
  }
  BeamPattern out;
  out.kind = PatternKind::Power;
  out.sweep_deg = refs.front().sweep_deg;
  out.directions = refs.front().directions;
  out.power.resize(out.sweep_deg.size());
  for (std::size_t i = 0; i < out.sweep_deg.size(); ++i) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < refs.size(); ++k) {
      acc += refs[k].field[i] * v_column[k];
    }
    out.power[i] = std::norm(acc);
  }
  return out;
}

std::size_t beam_index(const BeamPattern& p) {
  if (p.kind != PatternKind::Power) {
    throw ShapeError("beam metrics: power pattern required");
  }
  p.validate();
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.power.size(); ++i) {
    if (p.power[i] > p.power[best]) best = i; // ties keep the smaller sweep
  }
  if (p.power[best] <= 0.0) {
    throw DomainError("beam metrics: all-zero pattern has no direction");
  }
  return best;
}

Direction beam_direction(const BeamPattern& p) {
  return p.directions[beam_index(p)];
}

namespace {

// First local minima bracketing the main lobe; returns sample indices.
std::pair<std::size_t, std::size_t> null_to_null(const BeamPattern& p,
                                                 std::size_t peak) {
  std::size_t lo = peak;
  while (lo > 0 && p.power[lo - 1] < p.power[lo]) --lo;
  std::size_t hi = peak;
  while (hi + 1 < p.power.size() && p.power[hi + 1] < p.power[hi]) ++hi;
  return {lo, hi};
}

double crossing(double x0, double p0, double x1, double p1, double level) {
  if (p1 == p0) return x1;
  return x0 + (level - p0) * (x1 - x0) / (p1 - p0);
}

} // namespace

double hpbw(const BeamPattern& p) {
  const std::size_t peak = beam_index(p);
  const double half = 0.5 * p.power[peak];
  double left = p.sweep_deg.front();
  bool left_found = false;
  for (std::size_t i = peak; i > 0; --i) {
    if (p.power[i - 1] < half) {
      left = crossing(p.sweep_deg[i - 1], p.power[i - 1], p.sweep_deg[i],
                      p.power[i], half);
      left_found = true;
      break;
    }
  }
  double right = p.sweep_deg.back();
  bool right_found = false;
  for (std::size_t i = peak; i + 1 < p.power.size(); ++i) {
    if (p.power[i + 1] < half) {
      right = crossing(p.sweep_deg[i], p.power[i], p.sweep_deg[i + 1],
                       p.power[i + 1], half);
      right_found = true;
      break;
    }
  }
  if (!left_found || !right_found) {
    throw DomainError("hpbw: half-power level never crossed within the sweep");
  }
  return right - left;
}

SllResult sll(const BeamPattern& p) {
  const std::size_t peak = beam_index(p);
  const auto [lo, hi] = null_to_null(p, peak);
  // a sidelobe must be a strict local maximum outside the main lobe
  double side = 0.0;
  bool found = false;
  const std::size_t n = p.power.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= lo && i <= hi) continue;
    const bool left_ok = i == 0 || p.power[i] >= p.power[i - 1];
    const bool right_ok = i + 1 == n || p.power[i] >= p.power[i + 1];
    const bool strict = (i > 0 && p.power[i] > p.power[i - 1]) ||
                        (i + 1 < n && p.power[i] > p.power[i + 1]);
    if (left_ok && right_ok && strict && p.power[i] > 0.0) {
      side = std::max(side, p.power[i]);
      found = true;
    }
  }
  if (!found) return {false, 0.0};
  return {true, 10.0 * std::log10(side / p.power[peak])};
}

double scattering_efficiency(const BeamPattern& p) {
  const std::size_t peak = beam_index(p);
  const auto [lo, hi] = null_to_null(p, peak);
  double total = 0.0, main_lobe = 0.0;
  for (std::size_t i = 1; i < p.power.size(); ++i) {
    const double seg = 0.5 * (p.power[i] + p.power[i - 1]) *
                       (p.sweep_deg[i] - p.sweep_deg[i - 1]);
    total += seg;
    if (i > lo && i <= hi) main_lobe += seg;
  }
  if (total <= 0.0) throw DomainError("efficiency: zero total power");
  return main_lobe / total;
}

PatternMetrics pattern_metrics(const BeamPattern& p) {
  PatternMetrics m;
  const std::size_t peak = beam_index(p);
  m.beam_direction = p.directions[peak];
  m.beam_sweep_deg = p.sweep_deg[peak];
  try {
    m.hpbw_deg = hpbw(p);
    m.hpbw_defined = true;
  } catch (const DomainError&) {
    m.hpbw_deg = 0.0;
    m.hpbw_defined = false;
  }
  m.sll = sll(p);
  m.efficiency = scattering_efficiency(p);
  return m;
}

} // namespace iosim

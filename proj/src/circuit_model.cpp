#include "iosim/circuit_model.hpp"

#include <algorithm>
#include <cmath>

namespace iosim {
namespace {

// 1/z with the short-circuit guard: a vanishing impedance (or admittance)
// would otherwise propagate Inf/NaN through the cascade.
cplx guarded_inverse(cplx z, const char* what) {
  if (std::abs(z) < 1.0 / kImmittanceGuard)
    throw DegenerateInputError(std::string(what) +
                               ": immittance magnitude exceeds 1e12");
  return 1.0 / z;
}

double lerp(double a, double b, double t) { return (1.0 - t) * a + t * b; }
cplx lerp(cplx a, cplx b, double t) {
  return {lerp(a.real(), b.real(), t), lerp(a.imag(), b.imag(), t)};
}

// Bracketing index and fractional position along a sorted axis.
void locate(const std::vector<double>& axis, double x, std::size_t& i0,
            double& t) {
  if (axis.size() == 1) {
    i0 = 0;
    t = 0.0;
    return;
  }
  auto it = std::upper_bound(axis.begin(), axis.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - axis.begin());
  hi = std::clamp<std::size_t>(hi, 1, axis.size() - 1);
  i0 = hi - 1;
  t = (x - axis[i0]) / (axis[hi] - axis[i0]);
}

} // namespace

void FrequencyGrid::validate() const {
  if (points_hz.empty())
    throw ConfigError("frequency grid is empty");
  for (std::size_t i = 0; i < points_hz.size(); ++i) {
    if (points_hz[i] <= 0.0)
      throw ConfigError("frequency grid points must be positive");
    if (i > 0 && points_hz[i] <= points_hz[i - 1])
      throw ConfigError("frequency grid must be strictly increasing");
  }
  if (center_hz < points_hz.front() || center_hz > points_hz.back())
    throw ConfigError("center frequency outside the grid span");
}

void ElementGeometry::validate() const {
  const double vals[] = {element_width, element_length, patch_width,
                         patch_length, gap, feedline_width, layer_separation,
                         thickness};
  for (double v : vals)
    if (v <= 0.0)
      throw ConfigError("element geometry values must be positive");
  if (patch_width >= element_width || patch_length >= element_length)
    throw ConfigError("patch must be smaller than the element");
}

void PinDiodeModel::validate() const {
  const double vals[] = {on_resistance, on_inductance, off_inductance,
                         off_capacitance, off_resistance};
  for (double v : vals)
    if (v <= 0.0)
      throw ConfigError("PIN diode component values must be positive");
}

ElementState make_element_state(bool on, int diodes_per_layer) {
  ElementState s;
  s.upper.assign(diodes_per_layer, on ? DiodeState::On : DiodeState::Off);
  s.lower = s.upper;
  return s;
}

void YsTable::validate() const {
  if (freq_hz.empty() || freq_hz.size() != value.size())
    throw ConfigError("ys table empty or mismatched");
  for (std::size_t i = 1; i < freq_hz.size(); ++i)
    if (freq_hz[i] <= freq_hz[i - 1])
      throw ConfigError("ys table frequencies must be strictly increasing");
}

bool YsTable::covers(double f) const {
  if (freq_hz.empty())
    return false;
  if (freq_hz.size() == 1)
    return f == freq_hz.front();
  return f >= freq_hz.front() && f <= freq_hz.back();
}

cplx YsTable::at(double f) const {
  if (!covers(f))
    throw DomainError("frequency outside the tabulated ys span");
  if (freq_hz.size() == 1)
    return value.front();
  std::size_t i0;
  double t;
  locate(freq_hz, f, i0, t);
  return lerp(value[i0], value[i0 + 1], t);
}

void CircuitParams::validate() const {
  if (r1 < 0.0 || r2 < 0.0 || r3 < 0.0)
    throw ConfigError("resistances must be non-negative");
  const double lc[] = {l1, l2, l3, c1, c2, c3};
  for (double v : lc)
    if (v <= 0.0)
      throw ConfigError("inductances and capacitances must be positive");
  if (d1 < 0.0 || d2 < 0.0)
    throw ConfigError("reference-plane distances must be non-negative");
  ys1.validate();
  ys2.validate();
  pin.validate();
}

AbcdMatrix AbcdMatrix::operator*(const AbcdMatrix& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
          c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

cplx pin_admittance(const PinDiodeModel& model, DiodeState state,
                    double omega) {
  if (omega <= 0.0)
    throw DomainError("pin_admittance: omega must be positive");
  const cplx jw{0.0, omega};
  if (state == DiodeState::On)
    return guarded_inverse(model.on_resistance + jw * model.on_inductance,
                           "PIN diode ON branch");
  const cplx parallel =
      jw * model.off_capacitance + 1.0 / model.off_resistance;
  const cplx z = jw * model.off_inductance +
                 guarded_inverse(parallel, "PIN diode OFF RC branch");
  return guarded_inverse(z, "PIN diode OFF branch");
}

LayerAdmittances layer_admittances(const CircuitParams& params,
                                   const ElementState& state, double omega) {
  if (omega <= 0.0)
    throw DomainError("layer_admittances: omega must be positive");
  if (params.c1 == 0.0 || params.c2 == 0.0 || params.c3 == 0.0)
    throw DomainError("layer_admittances: zero capacitance");
  const cplx jw{0.0, omega};

  auto metal_layer = [&](const std::vector<DiodeState>& diodes) {
    cplx pin_sum{0.0, 0.0};
    for (DiodeState d : diodes)
      pin_sum += pin_admittance(params.pin, d, omega);
    const cplx branch =
        params.r1 + jw * params.l1 +
        guarded_inverse(jw * params.c2, "C2 branch") +
        guarded_inverse(pin_sum + jw * params.c1, "PIN/C1 branch");
    return guarded_inverse(branch, "patch branch") +
           guarded_inverse(params.r2 + jw * params.l2, "ground branch");
  };

  LayerAdmittances out;
  out.y_um = metal_layer(state.upper);
  out.y_lm = state.symmetric() ? out.y_um : metal_layer(state.lower);
  const cplx feed = params.r3 + jw * params.l3 +
                    guarded_inverse(jw * params.c3, "C3 branch");
  out.y_uf = guarded_inverse(feed, "feedline branch");
  out.y_lf = out.y_uf;
  return out;
}

AbcdMatrix abcd_cascade(const LayerAdmittances& layers, cplx ys1, cplx ys2) {
  const cplx z1 = guarded_inverse(ys1, "ys1 series branch");
  const cplx z2 = guarded_inverse(ys2, "ys2 series branch");
  return AbcdMatrix::shunt(layers.y_um) * AbcdMatrix::series(z1) *
         AbcdMatrix::shunt(layers.y_uf) * AbcdMatrix::series(z2) *
         AbcdMatrix::shunt(layers.y_lf) * AbcdMatrix::series(z1) *
         AbcdMatrix::shunt(layers.y_lm);
}

ScatterResponse scatter_coefficients(const AbcdMatrix& m, double z0,
                                     double beta, double d1, double d2) {
  if (z0 <= 0.0)
    throw DomainError("scatter_coefficients: z0 must be positive");
  const cplx left = m.a + m.b / z0;
  const cplx right = z0 * (m.c + m.d / z0);
  const cplx denom = left + right;
  if (std::abs(denom) < 1.0 / kImmittanceGuard)
    throw SingularityError("scatter_coefficients: (A+B/Z0)+Z0(C+D/Z0) = 0");
  ScatterResponse out;
  out.gamma_r = (left - right) / denom * std::polar(1.0, -2.0 * beta * d1);
  out.gamma_t = 2.0 / denom * std::polar(1.0, -beta * (d1 + d2));
  return out;
}

void AngleParamTable::validate() const {
  if (samples.empty() || theta.empty() || phi.empty())
    throw ConfigError("angle table is empty");
  if (samples.size() != theta.size() * phi.size())
    throw ConfigError("angle table samples do not cover the grid");
  if (theta.front() != 0.0)
    throw ConfigError("angle table must include normal incidence");
  for (std::size_t i = 1; i < theta.size(); ++i)
    if (theta[i] <= theta[i - 1])
      throw ConfigError("angle table theta axis must be strictly increasing");
  if (theta.back() >= kPi / 2.0)
    throw ConfigError("angle table theta must stay below 90 degrees");
  for (std::size_t i = 1; i < phi.size(); ++i)
    if (phi[i] <= phi[i - 1])
      throw ConfigError("angle table phi axis must be strictly increasing");
  const auto& knots1 = samples.front().ys1.freq_hz;
  const auto& knots2 = samples.front().ys2.freq_hz;
  for (const auto& s : samples) {
    s.validate();
    if (s.ys1.freq_hz != knots1 || s.ys2.freq_hz != knots2)
      throw ConfigError("angle table samples must share ys frequency knots");
  }
}

bool AngleParamTable::in_hull(const IncidenceAngle& angle) const {
  const bool theta_ok =
      theta.size() == 1
          ? angle.theta == theta.front()
          : (angle.theta >= theta.front() && angle.theta <= theta.back());
  const bool phi_ok =
      phi.size() == 1 ||
      (angle.phi >= phi.front() && angle.phi <= phi.back());
  return theta_ok && phi_ok;
}

AngleParamTable AngleParamTable::normal_incidence(CircuitParams params) {
  AngleParamTable t;
  t.theta = {0.0};
  t.phi = {0.0};
  t.samples = {std::move(params)};
  return t;
}

CircuitParams interpolate_params(const AngleParamTable& table,
                                 const IncidenceAngle& angle) {
  if (table.samples.empty())
    throw ConfigError("interpolate_params: empty angle table");
  if (!table.in_hull(angle))
    throw ExtrapolationError("incidence angle outside the angle table hull");

  std::size_t it, ip;
  double tt, tp;
  locate(table.theta, angle.theta, it, tt);
  if (table.phi.size() == 1) {
    ip = 0;
    tp = 0.0;
  } else {
    locate(table.phi, angle.phi, ip, tp);
  }
  const std::size_t np = table.phi.size();
  auto at = [&](std::size_t i, std::size_t j) -> const CircuitParams& {
    return table.samples[i * np + j];
  };
  const std::size_t it1 = table.theta.size() == 1 ? it : it + 1;
  const std::size_t ip1 = np == 1 ? ip : ip + 1;

  auto blend = [&](auto&& get) {
    const auto v00 = get(at(it, ip));
    const auto v10 = get(at(it1, ip));
    const auto v01 = get(at(it, ip1));
    const auto v11 = get(at(it1, ip1));
    return lerp(lerp(v00, v10, tt), lerp(v01, v11, tt), tp);
  };

  CircuitParams out = at(it, ip); // fixed fields (pin, knots) from the grid
  out.r1 = blend([](const CircuitParams& p) { return p.r1; });
  out.r2 = blend([](const CircuitParams& p) { return p.r2; });
  out.r3 = blend([](const CircuitParams& p) { return p.r3; });
  out.l1 = blend([](const CircuitParams& p) { return p.l1; });
  out.l2 = blend([](const CircuitParams& p) { return p.l2; });
  out.l3 = blend([](const CircuitParams& p) { return p.l3; });
  out.c1 = blend([](const CircuitParams& p) { return p.c1; });
  out.c2 = blend([](const CircuitParams& p) { return p.c2; });
  out.c3 = blend([](const CircuitParams& p) { return p.c3; });
  out.d1 = blend([](const CircuitParams& p) { return p.d1; });
  out.d2 = blend([](const CircuitParams& p) { return p.d2; });
  for (std::size_t k = 0; k < out.ys1.value.size(); ++k)
    out.ys1.value[k] =
        blend([k](const CircuitParams& p) { return p.ys1.value[k]; });
  for (std::size_t k = 0; k < out.ys2.value.size(); ++k)
    out.ys2.value[k] =
        blend([k](const CircuitParams& p) { return p.ys2.value[k]; });
  return out;
}

ScatterResponse evaluate_params(const CircuitParams& params,
                                const ElementState& state, double freq_hz,
                                const ModelConstants& constants) {
  const double omega = angular_frequency(freq_hz);
  const double beta = omega / constants.c0;
  const LayerAdmittances layers = layer_admittances(params, state, omega);
  const AbcdMatrix m =
      abcd_cascade(layers, params.ys1.at(freq_hz), params.ys2.at(freq_hz));
  return scatter_coefficients(m, constants.z0, beta, params.d1, params.d2);
}

ScatterResponse element_response(const AngleParamTable& table,
                                 const ElementState& state,
                                 const IncidenceAngle& angle, double freq_hz,
                                 const ModelConstants& constants) {
  const CircuitParams params = interpolate_params(table, angle);
  return evaluate_params(params, state, freq_hz, constants);
}

} // namespace iosim

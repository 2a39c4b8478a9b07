#pragma once

#include <complex>
#include <vector>

#include "iosim/errors.hpp"
#include "iosim/units.hpp"

// Two-port equivalent-circuit response of a single IOS element: layer
// admittances, ABCD cascade, and reflection/transmission coefficients as
// functions of state, frequency, and angle of incidence.

namespace iosim {

using cplx = std::complex<double>;

// Immittances beyond this magnitude are treated as shorts/opens.
inline constexpr double kImmittanceGuard = 1e12;

struct ModelConstants {
  double z0 = kFreeSpaceImpedance; // ohm
  double c0 = kSpeedOfLight;       // m/s
};

struct FrequencyGrid {
  std::vector<double> points_hz; // strictly increasing, all > 0
  double center_hz = 0.0;

  void validate() const;
};

struct IncidenceAngle {
  double theta = 0.0; // radians, [0, pi/2)
  double phi = 0.0;   // radians, [0, 2*pi)
};

struct ElementGeometry {
  double element_width = 0.0;   // w_E, m
  double element_length = 0.0;  // l_E, m
  double patch_width = 0.0;     // w_P, m
  double patch_length = 0.0;    // l_P, m
  double gap = 0.0;             // patch-ground gap, m
  double feedline_width = 0.0;  // w_F, m
  double layer_separation = 0.0; // m
  double thickness = 0.0;        // m

  void validate() const;
};

enum class DiodeState { Off, On };

// ON branch: series R+L. OFF branch: series L feeding a parallel {C, R}.
struct PinDiodeModel {
  double on_resistance = 2.1;      // ohm
  double on_inductance = 0.6e-9;   // H
  double off_inductance = 0.6e-9;  // H
  double off_capacitance = 0.17e-12; // F
  double off_resistance = 3.0e3;   // ohm

  void validate() const;
};

struct ElementState {
  std::vector<DiodeState> upper;
  std::vector<DiodeState> lower;

  bool symmetric() const { return upper == lower; }
};

// Uniform state with the same diode setting on both layers.
ElementState make_element_state(bool on, int diodes_per_layer = 1);

// Complex admittance tabulated against frequency, linear in re/im.
struct YsTable {
  std::vector<double> freq_hz; // strictly increasing
  std::vector<cplx> value;     // siemens

  void validate() const;
  bool covers(double f) const;
  cplx at(double f) const; // DomainError outside the tabulated span
};

struct CircuitParams {
  double r1 = 0.0, r2 = 0.0, r3 = 0.0; // ohm
  double l1 = 0.0, l2 = 0.0, l3 = 0.0; // H
  double c1 = 0.0, c2 = 0.0, c3 = 0.0; // F
  YsTable ys1, ys2;
  double d1 = 0.0, d2 = 0.0; // reference-plane distances, m
  PinDiodeModel pin;

  void validate() const;
};

struct AbcdMatrix {
  cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

  cplx determinant() const { return a * d - b * c; }
  static AbcdMatrix identity() { return {}; }
  static AbcdMatrix shunt(cplx y) { return {1.0, 0.0, y, 1.0}; }
  static AbcdMatrix series(cplx z) { return {1.0, z, 0.0, 1.0}; }
  AbcdMatrix operator*(const AbcdMatrix& rhs) const;
};

struct ScatterResponse {
  cplx gamma_r{0.0, 0.0};
  cplx gamma_t{0.0, 0.0};
};

struct LayerAdmittances {
  cplx y_um, y_uf, y_lf, y_lm; // siemens
};

// Angle-sampled circuit parameters on a (theta, phi) grid, bilinear
// interpolation on every scalar and on re/im of the ys tables. A
// single-entry phi axis means the parameters are phi-independent.
struct AngleParamTable {
  std::vector<double> theta; // radians, strictly increasing, theta[0] == 0
  std::vector<double> phi;   // radians, strictly increasing
  std::vector<CircuitParams> samples; // theta-major: [it * phi.size() + ip]

  void validate() const;
  bool in_hull(const IncidenceAngle& angle) const;

  static AngleParamTable normal_incidence(CircuitParams params);
};

cplx pin_admittance(const PinDiodeModel& model, DiodeState state, double omega);

LayerAdmittances layer_admittances(const CircuitParams& params,
                                   const ElementState& state, double omega);

AbcdMatrix abcd_cascade(const LayerAdmittances& layers, cplx ys1, cplx ys2);

ScatterResponse scatter_coefficients(const AbcdMatrix& m, double z0,
                                     double beta, double d1, double d2);

CircuitParams interpolate_params(const AngleParamTable& table,
                                 const IncidenceAngle& angle);

ScatterResponse element_response(const AngleParamTable& table,
                                 const ElementState& state,
                                 const IncidenceAngle& angle, double freq_hz,
                                 const ModelConstants& constants = {});

// Full pipeline for one parameter set at one frequency.
ScatterResponse evaluate_params(const CircuitParams& params,
                                const ElementState& state, double freq_hz,
                                const ModelConstants& constants = {});

} // namespace iosim

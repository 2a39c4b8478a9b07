#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "iosim/circuit_model.hpp"
#include "iosim/defaults.hpp"

using namespace iosim;

namespace {

constexpr double kOmegaC = 2.0 * kPi * 3.6e9;

// Independent 2x2 complex matrix product, kept apart from AbcdMatrix.
struct Mat2 {
  cplx m[2][2];
};

Mat2 mul(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
  return r;
}

CircuitParams random_passive_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  CircuitParams p;
  p.r1 = u(rng) * 5.0;
  p.r2 = u(rng) * 5.0;
  p.r3 = u(rng) * 5.0;
  p.l1 = (0.01 + u(rng)) * 1e-9;
  p.l2 = (0.01 + u(rng)) * 1e-9;
  p.l3 = (0.01 + u(rng)) * 1e-9;
  p.c1 = (0.1 + 20.0 * u(rng)) * 1e-12;
  p.c2 = (0.1 + 900.0 * u(rng)) * 1e-12;
  p.c3 = (0.1 + 300.0 * u(rng)) * 1e-12;
  p.d1 = u(rng) * 0.1;
  p.d2 = u(rng) * 0.1;
  p.pin.on_resistance = 0.5 + u(rng) * 5.0;
  p.pin.on_inductance = (0.1 + u(rng)) * 1e-9;
  p.pin.off_inductance = (0.1 + u(rng)) * 1e-9;
  p.pin.off_capacitance = (0.05 + u(rng)) * 1e-12;
  p.pin.off_resistance = 100.0 + u(rng) * 5000.0;
  const cplx y1{0.001 + u(rng) * 0.05, (u(rng) - 0.5) * 0.2};
  const cplx y2{0.001 + u(rng) * 0.05, (u(rng) - 0.5) * 0.2};
  p.ys1.freq_hz = {3.0e9, 4.2e9};
  p.ys1.value = {y1, y1};
  p.ys2.freq_hz = {3.0e9, 4.2e9};
  p.ys2.value = {y2, y2};
  return p;
}

} // namespace

TEST_CASE("pin_admittance: pure resistance") {
  PinDiodeModel m;
  m.on_resistance = 1.0;
  m.on_inductance = 0.0;
  CHECK(pin_admittance(m, DiodeState::On, kOmegaC) == cplx{1.0, 0.0});
}

TEST_CASE("pin_admittance: capacitive OFF limit") {
  PinDiodeModel m;
  m.off_inductance = 1e-30;
  m.off_capacitance = 1e-12;
  m.off_resistance = 1e11;
  const cplx y = pin_admittance(m, DiodeState::Off, kOmegaC);
  CHECK(std::abs(y.real()) < 1e-6);
  CHECK(y.imag() == doctest::Approx(kOmegaC * 1e-12).epsilon(1e-9));
  CHECK(y.imag() == doctest::Approx(2.262e-2).epsilon(1e-3));
}

TEST_CASE("pin_admittance: ON branch against direct complex division") {
  PinDiodeModel m;
  m.on_resistance = 2.1;
  m.on_inductance = 0.6e-9;
  const cplx y = pin_admittance(m, DiodeState::On, kOmegaC);
  // hand oracle: 1/(a+jb) = (a-jb)/(a^2+b^2)
  const double a = 2.1;
  const double b = kOmegaC * 0.6e-9;
  const double den = a * a + b * b;
  CHECK(y.real() == doctest::Approx(a / den).epsilon(1e-12));
  CHECK(y.imag() == doctest::Approx(-b / den).epsilon(1e-12));
}

TEST_CASE("pin_admittance rejects non-positive omega") {
  CHECK_THROWS_AS(pin_admittance(PinDiodeModel{}, DiodeState::On, 0.0),
                  DomainError);
  CHECK_THROWS_AS(pin_admittance(PinDiodeModel{}, DiodeState::On, -1.0),
                  DomainError);
}

TEST_CASE("layer_admittances: symmetric states give bit-identical layers") {
  const CircuitParams p = default_element_scalars();
  for (bool on : {false, true}) {
    const auto layers =
        layer_admittances(p, make_element_state(on, 2), kOmegaC);
    CHECK(layers.y_um == layers.y_lm);
    CHECK(layers.y_uf == layers.y_lf);
  }
}

TEST_CASE("layer_admittances: term-by-term oracle on the published scalars") {
  const CircuitParams p = default_element_scalars();
  const auto layers =
      layer_admittances(p, make_element_state(false, 1), kOmegaC);

  // Independent re-evaluation, written as one flat expression per layer.
  const cplx jw{0.0, kOmegaC};
  const cplx ypin_parallel = jw * p.pin.off_capacitance +
                             cplx{1.0, 0.0} / p.pin.off_resistance;
  const cplx ypin =
      1.0 / (jw * p.pin.off_inductance + 1.0 / ypin_parallel);
  const cplx y_um = 1.0 / (p.r1 + jw * p.l1 + 1.0 / (jw * p.c2) +
                           1.0 / (ypin + jw * p.c1)) +
                    1.0 / (p.r2 + jw * p.l2);
  const cplx y_uf = 1.0 / (p.r3 + jw * p.l3 + 1.0 / (jw * p.c3));

  CHECK(std::abs(layers.y_um - y_um) <= 1e-12 * std::abs(y_um));
  CHECK(std::abs(layers.y_uf - y_uf) <= 1e-12 * std::abs(y_uf));
  CHECK(std::abs(layers.y_lm - y_um) <= 1e-12 * std::abs(y_um));
}

TEST_CASE("layer_admittances: degenerate feedline raises the guard") {
  CircuitParams p = default_element_scalars();
  p.r3 = 0.0;
  p.l3 = 1e-30;
  p.c3 = 1e30;
  CHECK_THROWS_AS(
      layer_admittances(p, make_element_state(false, 1), kOmegaC),
      DegenerateInputError);
}

TEST_CASE("layer_admittances: zero capacitance is a domain error") {
  CircuitParams p = default_element_scalars();
  p.c2 = 0.0;
  CHECK_THROWS_AS(layer_admittances(p, make_element_state(false, 1), kOmegaC),
                  DomainError);
}

TEST_CASE("abcd_cascade: empty network is the identity") {
  LayerAdmittances layers{{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  const auto m = abcd_cascade(layers, cplx{1e10, 0.0}, cplx{1e10, 0.0});
  CHECK(std::abs(m.a - 1.0) < 1e-9);
  CHECK(std::abs(m.b) < 1e-9);
  CHECK(std::abs(m.c) < 1e-9);
  CHECK(std::abs(m.d - 1.0) < 1e-9);
}

TEST_CASE("abcd_cascade: single shunt factor") {
  const cplx y{0.02, -0.01};
  LayerAdmittances layers{y, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  const auto m = abcd_cascade(layers, cplx{1e10, 0.0}, cplx{1e10, 0.0});
  CHECK(std::abs(m.a - 1.0) < 1e-9);
  CHECK(std::abs(m.b) < 1e-9);
  CHECK(std::abs(m.c - y) < 1e-9);
  CHECK(std::abs(m.d - 1.0) < 1e-9);
}

TEST_CASE("abcd_cascade: matches an independent 7-factor matrix product") {
  const CircuitParams p = default_element_scalars();
  const auto layers =
      layer_admittances(p, make_element_state(true, 1), kOmegaC);
  const cplx ys1 = p.ys1.at(3.6e9);
  const cplx ys2 = p.ys2.at(3.6e9);
  const auto m = abcd_cascade(layers, ys1, ys2);

  auto shunt = [](cplx y) { return Mat2{{{1.0, 0.0}, {y, 1.0}}}; };
  auto series = [](cplx z) { return Mat2{{{1.0, z}, {0.0, 1.0}}}; };
  Mat2 r = shunt(layers.y_um);
  r = mul(r, series(1.0 / ys1));
  r = mul(r, shunt(layers.y_uf));
  r = mul(r, series(1.0 / ys2));
  r = mul(r, shunt(layers.y_lf));
  r = mul(r, series(1.0 / ys1));
  r = mul(r, shunt(layers.y_lm));

  CHECK(std::abs(m.a - r.m[0][0]) <= 1e-12 * std::abs(r.m[0][0]));
  CHECK(std::abs(m.b - r.m[0][1]) <= 1e-12 * std::abs(r.m[0][1]));
  CHECK(std::abs(m.c - r.m[1][0]) <= 1e-12 * std::abs(r.m[1][0]));
  CHECK(std::abs(m.d - r.m[1][1]) <= 1e-12 * std::abs(r.m[1][1]));
}

TEST_CASE("abcd_cascade: zero ys is an open-circuit error") {
  LayerAdmittances layers{};
  CHECK_THROWS_AS(abcd_cascade(layers, cplx{0.0, 0.0}, cplx{0.01, 0.0}),
                  DegenerateInputError);
}

TEST_CASE("scatter_coefficients: matched line") {
  const auto r = scatter_coefficients(AbcdMatrix::identity(), 377.0, 75.0,
                                      0.0, 0.0);
  CHECK(std::abs(r.gamma_r) < 1e-15);
  CHECK(std::abs(r.gamma_t - 1.0) < 1e-15);
}

TEST_CASE("scatter_coefficients: shunt on a line against the closed form") {
  const double z0 = 377.0;
  const cplx y{2.0 / z0, 0.0};
  const auto r =
      scatter_coefficients(AbcdMatrix::shunt(y), z0, 75.0, 0.0, 0.0);
  // closed form: Gamma = -Y*Z0 / (2 + Y*Z0)
  CHECK(std::abs(r.gamma_r - cplx{-0.5, 0.0}) < 1e-15);
  CHECK(std::abs(r.gamma_t - cplx{0.5, 0.0}) < 1e-15);
}

TEST_CASE("scatter_coefficients rejects a vanishing denominator") {
  // A+B/Z0 = 1, Z0(C+D/Z0) = -1
  AbcdMatrix m{cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0},
               cplx{-1.0, 0.0}};
  CHECK_THROWS_AS(scatter_coefficients(m, 377.0, 75.0, 0.0, 0.0),
                  SingularityError);
}

TEST_CASE("property: passivity and reciprocity over random passive sets") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uf(3.0e9, 4.2e9);
  for (int trial = 0; trial < 500; ++trial) {
    const CircuitParams p = random_passive_params(rng);
    const bool on = trial % 2 == 0;
    const double f = uf(rng);
    const double omega = 2.0 * kPi * f;
    const auto layers = layer_admittances(p, make_element_state(on, 1), omega);
    const auto m = abcd_cascade(layers, p.ys1.at(f), p.ys2.at(f));
    const double det_scale =
        std::max(1.0, std::abs(m.a * m.d) + std::abs(m.b * m.c));
    CHECK(std::abs(m.determinant() - 1.0) <= 1e-9 * det_scale);
    const auto r =
        scatter_coefficients(m, 377.0, omega / kSpeedOfLight, p.d1, p.d2);
    CHECK(std::norm(r.gamma_r) + std::norm(r.gamma_t) <= 1.0 + 1e-9);
    CHECK(std::abs(r.gamma_t) > 0.0); // no purely reflecting configuration
  }
}

TEST_CASE("property: reference-plane shift rotates the coefficients") {
  const CircuitParams p = default_element_scalars();
  const double f = 3.6e9;
  const double beta = 2.0 * kPi * f / kSpeedOfLight;
  const auto layers =
      layer_admittances(p, make_element_state(false, 1), 2.0 * kPi * f);
  const auto m = abcd_cascade(layers, p.ys1.at(f), p.ys2.at(f));
  const double delta = 0.013;
  const auto base = scatter_coefficients(m, 377.0, beta, p.d1, p.d2);
  const auto moved = scatter_coefficients(m, 377.0, beta, p.d1 + delta, p.d2);
  CHECK(std::abs(moved.gamma_r -
                 base.gamma_r * std::polar(1.0, -2.0 * beta * delta)) < 1e-12);
  CHECK(std::abs(moved.gamma_t -
                 base.gamma_t * std::polar(1.0, -beta * delta)) < 1e-12);
}

TEST_CASE("Remark 1: matched network is purely refracting") {
  const double z0 = 377.0;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const cplx a{1.0 + 0.5 * u(rng), 0.5 * u(rng)};
    const cplx b{z0 * 0.3 * u(rng), z0 * 0.3 * u(rng)};
    const cplx d{1.0 + 0.5 * u(rng), 0.5 * u(rng)};
    const cplx left = a + b / z0;
    const cplx c = (left - d) / z0; // forces Z0(C+D/Z0) == left
    const double beta = 75.4;
    const double d1 = 0.07, d2 = 0.05;
    const auto r = scatter_coefficients({a, b, c, d}, z0, beta, d1, d2);
    CHECK(std::abs(r.gamma_r) <= 1e-9);
    const cplx expected = 1.0 / left * std::polar(1.0, -beta * (d1 + d2));
    CHECK(std::abs(r.gamma_t - expected) <= 1e-9);
  }
}

TEST_CASE("interpolate_params: identity at samples, midpoint blending") {
  CircuitParams a = default_element_scalars();
  CircuitParams b = a;
  a.l2 = 0.2e-9;
  b.l2 = 0.6e-9;
  AngleParamTable table;
  table.theta = {0.0, deg_to_rad(40.0)};
  table.phi = {0.0};
  table.samples = {a, b};
  table.validate();

  CHECK(interpolate_params(table, {0.0, 0.0}).l2 == a.l2);
  CHECK(interpolate_params(table, {deg_to_rad(40.0), 0.0}).l2 == b.l2);
  const auto mid = interpolate_params(table, {deg_to_rad(20.0), 0.0});
  CHECK(mid.l2 == doctest::Approx(0.4e-9).epsilon(1e-12));
  CHECK_THROWS_AS(interpolate_params(table, {deg_to_rad(50.0), 0.0}),
                  ExtrapolationError);
}

TEST_CASE("element_response: single-sample table equals direct evaluation") {
  const CircuitParams p = default_element_scalars();
  const auto table = AngleParamTable::normal_incidence(p);
  const auto via_table = element_response(table, make_element_state(true, 1),
                                          {0.0, 0.0}, 3.6e9);
  const auto direct = evaluate_params(p, make_element_state(true, 1), 3.6e9);
  CHECK(via_table.gamma_r == direct.gamma_r);
  CHECK(via_table.gamma_t == direct.gamma_t);
  CHECK_THROWS_AS(element_response(table, make_element_state(true, 1),
                                   {0.1, 0.0}, 3.6e9),
                  ExtrapolationError);
}

namespace {

double wrap_deg(double x) {
  x = std::fmod(x + 180.0, 360.0);
  if (x < 0.0) x += 360.0;
  return x - 180.0;
}

} // namespace

TEST_CASE("shipped defaults: OFF power split and state phase contrasts") {
  const CircuitParams p = default_element_params();
  const auto off = evaluate_params(p, make_element_state(false, 1), kCenterFrequencyHz);
  const auto on = evaluate_params(p, make_element_state(true, 1), kCenterFrequencyHz);

  const double p_off = std::norm(off.gamma_r) + std::norm(off.gamma_t);
  CHECK(p_off == doctest::Approx(0.5478).epsilon(2e-3));

  const double dt = wrap_deg(rad_to_deg(std::arg(on.gamma_t) - std::arg(off.gamma_t)));
  const double dr = wrap_deg(rad_to_deg(std::arg(on.gamma_r) - std::arg(off.gamma_r)));
  CHECK(std::abs(dt) == doctest::Approx(179.81).epsilon(1e-2));
  CHECK(std::abs(dr) == doctest::Approx(130.09).epsilon(1e-2));
}

TEST_CASE("shipped angle table: validates, reflection share grows with angle") {
  const auto table = default_angle_table();
  table.validate();
  CHECK(table.in_hull({deg_to_rad(74.9), 0.0}));
  CHECK_FALSE(table.in_hull({deg_to_rad(75.1), 0.0}));

  const auto state_off = make_element_state(false, 1);
  const auto at0 = element_response(table, state_off, {0.0, 0.0}, kCenterFrequencyHz);
  const auto at75 = element_response(table, state_off, {deg_to_rad(75.0), 0.0},
                                     kCenterFrequencyHz);
  const double share0 = std::norm(at0.gamma_r) /
                        (std::norm(at0.gamma_r) + std::norm(at0.gamma_t));
  const double share75 = std::norm(at75.gamma_r) /
                         (std::norm(at75.gamma_r) + std::norm(at75.gamma_t));
  CHECK(share75 > share0);
  // oblique response must differ from the normal-incidence one (criterion 11
  // hinges on this)
  CHECK(std::abs(at75.gamma_r - at0.gamma_r) > 0.05);
}

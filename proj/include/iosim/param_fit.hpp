#pragma once

#include <cstdint>
#include <vector>

#include "iosim/circuit_model.hpp"

// Least-squares fit of CircuitParams (scalars in log space, ys knots in
// linear space) to target reflection/transmission spectra.

namespace iosim {

struct FitPoint {
  ElementState state;
  double freq_hz = 0.0;
  cplx gamma_r{0.0, 0.0};
  cplx gamma_t{0.0, 0.0};
  double weight = 1.0;
};

struct FitTarget {
  std::vector<FitPoint> points;

  // At least 2 distinct states x 5 distinct frequencies; finite nonnegative
  // weights, not all zero.
  void validate() const;
  std::vector<double> frequencies() const; // sorted unique
};

struct FitInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x >= lo && x <= hi; }
};

struct FitBounds {
  FitInterval resistance{1e-12, 1e3}; // ohm
  FitInterval inductance{1e-15, 1e-6}; // H
  FitInterval capacitance{1e-16, 1e-8}; // F
  FitInterval ys_real{1e-6, 50.0};      // S
  FitInterval ys_imag{-200.0, 200.0};   // S

  void validate() const;
};

struct FitOptions {
  FitBounds bounds;
  int budget = 60000;   // max model evaluations across all starts
  int starts = 6;       // multi-start candidates (first = unperturbed init)
  std::uint64_t seed = 0;
  double ridge = 1e-6;  // knot-to-knot difference penalty on ys tables
  double converge_tol = 1e-3;
};

struct FitResult {
  CircuitParams params;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Weighted RMS of complex error over both coefficients:
// sqrt(sum w*(|eGr|^2 + |eGt|^2) / (2*sum w)).
double fit_residual(const CircuitParams& params, const FitTarget& target);

// Bounded derivative-free coordinate descent with adaptive step and seeded
// multi-start; deterministic for a fixed seed. Lowest residual wins; ties
// break on lexicographic parameter order.
FitResult fit_params(const FitTarget& target, const CircuitParams& init,
                     const FitOptions& options = {});

} // namespace iosim

#pragma once

#include "iosim/circuit_model.hpp"

namespace iosim {

inline constexpr double kCenterFrequencyHz = 3.6e9;

// Published equivalent-circuit values for the sample element at normal
// incidence, with calibrated interlayer admittance tables.
CircuitParams default_element_params();

// Same scalars with a flat placeholder ys (handy for synthetic tests that do
// not care about the calibrated spectra).
CircuitParams default_element_scalars();

// Angle-sampled defaults (theta = 0/20/40/60/75 deg, phi-independent),
// calibrated so reflection grows and the reflection phase contrast shrinks
// with incidence angle.
AngleParamTable default_angle_table();

} // namespace iosim

#pragma once

#include <cstdint>
#include <vector>

#include "iosim/circuit_model.hpp"

// Array geometry, element grouping, Eq. (8) beam patterns, and the pattern
// metrics of the synthesis section.
//
// Coordinate convention: the surface lies in the x-z plane with normal +y,
// x horizontal and z vertical. The transmitter sits at y > 0 (reflection
// side); y < 0 is the refraction side. The default sweep is the horizontal
// cut, direction (sin a, cos a, 0) for sweep angle a in degrees.

namespace iosim {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
};

struct Direction {
  double theta = 0.0; // radians from the +y surface normal, [0, pi]
  double phi = 0.0;   // radians, azimuth in the surface (x-z) plane
};

Vec3 unit_vector(const Direction& d);
// Horizontal-cut direction (sin a, cos a, 0) for a sweep angle in degrees.
Direction direction_from_sweep(double angle_deg);

struct ArrayLayout {
  int rows = 0;
  int cols = 0;
  double pitch_col = 0.0; // horizontal element pitch (w_E), m
  double pitch_row = 0.0; // vertical element pitch (l_E), m
  Vec3 center{};          // array center in world coordinates
  std::vector<std::uint8_t> active; // row-major mask; empty = all active

  void validate() const;
  int count() const { return rows * cols; }
  bool is_active(int element) const;
  int active_count() const;
  // Element centers, row-major (row r, col c) -> index r*cols + c.
  Vec3 element_center(int element) const;
};

struct GroupConfiguration {
  std::vector<int> group_of;      // per element, 0-based group index
  int num_groups = 0;
  std::vector<std::uint8_t> s;    // per-group binary state

  void validate(const ArrayLayout& layout) const;
  ElementState element_state(int element, int diodes_per_layer = 1) const;

  static GroupConfiguration rows(const ArrayLayout& layout);
  static GroupConfiguration blocks(const ArrayLayout& layout, int block_rows,
                                   int block_cols);
  static GroupConfiguration uniform(const ArrayLayout& layout);
};

enum class PatternKind { Field, Power };

struct BeamPattern {
  std::vector<double> sweep_deg;  // strictly increasing sweep coordinate
  std::vector<Direction> directions;
  std::vector<cplx> field;        // PatternKind::Field
  std::vector<double> power;      // PatternKind::Power
  PatternKind kind = PatternKind::Field;

  void validate() const; // >= 8 samples, consistent sizes, power >= 0
  std::size_t size() const { return sweep_deg.size(); }
};

struct TxAntenna {
  Vec3 position{};
  double gain_dbi = 0.0;
};

struct SllResult {
  bool found = false; // false = "no-sidelobe"
  double db = 0.0;    // <= 0 when found
};

struct PatternMetrics {
  Direction beam_direction{};
  double beam_sweep_deg = 0.0;
  double hpbw_deg = 0.0;
  bool hpbw_defined = false;
  SllResult sll{};
  double efficiency = 0.0;
};

// Incidence angle of the ray element -> tx, measured from the surface
// normal; phi canonicalized to [0, 2*pi), 0 when the in-plane component
// vanishes.
IncidenceAngle local_incidence(const ArrayLayout& layout, const Vec3& tx,
                               int element);

// Eq. (8) reference pattern E_k: per-element spherical spreading and phase
// from tx, element response at the local incidence angle, far-field steering
// phase toward each sweep direction.
BeamPattern reference_pattern(const ArrayLayout& layout,
                              const GroupConfiguration& config,
                              const AngleParamTable& table, const TxAntenna& tx,
                              const std::vector<double>& sweep_deg,
                              double freq_hz, int diodes_per_layer = 1,
                              const ModelConstants& constants = {});

// F_j(dir) = |sum_k E_k(dir) * v[k]|^2.
BeamPattern beam_pattern(const std::vector<BeamPattern>& refs,
                         const std::vector<cplx>& v_column);

// Argmax sample; ties break toward the smallest sweep coordinate.
Direction beam_direction(const BeamPattern& p);
std::size_t beam_index(const BeamPattern& p);

// Contiguous interval around the main lobe with power >= max/2, crossings
// linearly interpolated. Throws DomainError if the level is never crossed.
double hpbw(const BeamPattern& p);

SllResult sll(const BeamPattern& p);

// Power between the first nulls around the main lobe over total power,
// trapezoid-weighted.
double scattering_efficiency(const BeamPattern& p);

PatternMetrics pattern_metrics(const BeamPattern& p);

} // namespace iosim

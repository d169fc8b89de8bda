#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/reflector.hpp"

namespace bqdirac {

// Circular transformations of the temporal (x0, x3) and spatial (x1, x2)
// planes. Coordinates per chart, in storage order:
//   L: (x0, x1, x2, x3)
//   T: (s0, x1, x2, r0)
//   M: (x0, s1, r1, x3)
//   S: (s0, s1, r1, r0)
// which is also the order the charts are renamed onto Cartesian axes.

enum class ChartKind { L, M, T, S };

std::string_view to_string(ChartKind kind);
ChartKind parse_chart_kind(std::string_view name);

/// A chart label with the circle radii it needs. T needs R0, M needs R1, S
/// needs both, L needs neither; create() enforces this.
class SpaceChart {
 public:
  static SpaceChart create(ChartKind kind, std::optional<double> R0 = std::nullopt,
                           std::optional<double> R1 = std::nullopt);
  static SpaceChart minkowski() { return create(ChartKind::L); }

  ChartKind kind() const { return kind_; }
  std::optional<double> R0() const { return R0_; }
  std::optional<double> R1() const { return R1_; }

  bool has_temporal_circle() const { return kind_ == ChartKind::T || kind_ == ChartKind::S; }
  bool has_spatial_circle() const { return kind_ == ChartKind::M || kind_ == ChartKind::S; }

 private:
  SpaceChart(ChartKind kind, std::optional<double> R0, std::optional<double> R1)
      : kind_(kind), R0_(R0), R1_(R1) {}

  ChartKind kind_;
  std::optional<double> R0_;
  std::optional<double> R1_;
};

/// Hyperbolic polar form of the temporal plane: x0 = r0 sinh θ0, x3 = r0 cosh θ0.
struct TemporalPolar {
  double r0 = 0.0;
  double theta0 = 0.0;
};

/// Polar form of the spatial plane: x1 = r1 sin θ1, x2 = r1 cos θ1.
struct SpatialPolar {
  double r1 = 0.0;
  double theta1 = 0.0;
};

/// (x0, x3) -> (r0, θ0). Covers |x3| > |x0|; r0 takes the sign of x3.
/// Throws LightConePoint when x3² - x0² <= 0.
TemporalPolar temporal_polar(double x0, double x3);
std::array<double, 2> temporal_cartesian(const TemporalPolar& p);

SpatialPolar spatial_polar(double x1, double x2);
std::array<double, 2> spatial_cartesian(const SpatialPolar& p);

/// Arc in L from the chart arc: s~ = r·s/R. Total in r, including r = 0.
double arc_map(double r, double s, double R);

/// Chart arc from the arc in L: s = R·s~/r. Requires r != 0.
double arc_map_inverse(double r, double s_tilde, double R);

/// Four reflectors replacing (i_0, i_1, i_2, i_3) after rotating one plane.
struct RotatedBasis {
  std::array<Reflector, 4> e;
};

/// (i_s0, i_1, i_2, i_r0), inverting i_0 = i_r0 sin θ^ + i_s0 cos θ^,
/// i_3 = i_r0 cos θ^ - i_s0 sin θ^ at the imaginary angle θ^ = -iθ0.
RotatedBasis rotate_temporal_basis(double theta0);

/// (i_0, i_s1, i_r1, i_3), inverting i_1 = i_r1 sin θ1 + i_s1 cos θ1,
/// i_2 = i_r1 cos θ1 - i_s1 sin θ1.
RotatedBasis rotate_spatial_basis(double theta1);

/// The fixed basis (i_0, i_1, i_2, i_3) as reflectors.
RotatedBasis fixed_basis();

/// Largest deviation of a basis from e_mu² = 1 and e_mu e_nu = -e_nu e_mu.
double anticommutation_defect(const RotatedBasis& basis);

/// Matrix taking (1/r0 ∂/∂θ0, ∂/∂r0) to (∂/∂x0, ∂/∂x3).
std::array<std::array<double, 2>, 2> temporal_derivative_matrix(double theta0);

/// A~^B = (r1/R1)·A~: potential in M or S given the potential in L.
Biquaternion scale_potential(const Biquaternion& potential, double r1, double R1);

/// Maps a point between any two charts through L. Throws LightConePoint when
/// the temporal polar decomposition is needed for an on-cone point.
Point4 chart_map(const Point4& point, const SpaceChart& from, const SpaceChart& to);

/// A point tagged with the chart it lives in; the JSON record form used by
/// the CLI is {"chart": "S", "coords": [..4..], "R0": r, "R1": r}.
struct ChartPoint {
  SpaceChart chart;
  Point4 coords;
};

std::string to_json(const ChartPoint& p);
ChartPoint chart_point_from_json(std::string_view text);

}  // namespace bqdirac

#include "bqdirac/circle_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "bqdirac/errors.hpp"
#include "bqdirac/report.hpp"

namespace bqdirac {

std::string_view to_string(ChartKind kind) {
  switch (kind) {
    case ChartKind::L: return "L";
    case ChartKind::M: return "M";
    case ChartKind::T: return "T";
    case ChartKind::S: return "S";
  }
  return "?";
}

ChartKind parse_chart_kind(std::string_view name) {
  if (name == "L") return ChartKind::L;
  if (name == "M") return ChartKind::M;
  if (name == "T") return ChartKind::T;
  if (name == "S") return ChartKind::S;
  throw Error(ErrorKind::InvalidChart, "unknown chart '" + std::string(name) + "' (expected L, M, T or S)");
}

namespace {

void require_positive_radius(double R, const char* name) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    std::ostringstream msg;
    msg << name << " = " << R << " must be positive and finite";
    throw Error(ErrorKind::NonpositiveRadiusParameter, msg.str());
  }
}

}  // namespace

SpaceChart SpaceChart::create(ChartKind kind, std::optional<double> R0, std::optional<double> R1) {
  const bool needs_R0 = kind == ChartKind::T || kind == ChartKind::S;
  const bool needs_R1 = kind == ChartKind::M || kind == ChartKind::S;
  if (needs_R0 && !R0) {
    throw Error(ErrorKind::InvalidChart, std::string("chart ") + std::string(to_string(kind)) + " requires R0");
  }
  if (needs_R1 && !R1) {
    throw Error(ErrorKind::InvalidChart, std::string("chart ") + std::string(to_string(kind)) + " requires R1");
  }
  if (needs_R0) require_positive_radius(*R0, "R0");
  if (needs_R1) require_positive_radius(*R1, "R1");
  // Radii a chart has no circle for are dropped rather than carried along.
  return SpaceChart(kind, needs_R0 ? R0 : std::nullopt, needs_R1 ? R1 : std::nullopt);
}

TemporalPolar temporal_polar(double x0, double x3) {
  const double interval = (x3 - x0) * (x3 + x0);
  if (!(interval > 0.0)) {
    std::ostringstream msg;
    msg << "(x0, x3) = (" << x0 << ", " << x3 << ") has x3^2 - x0^2 <= 0; "
        << "the hyperbolic polar map only covers |x3| > |x0|";
    throw Error(ErrorKind::LightConePoint, msg.str());
  }
  const double r0 = std::copysign(std::sqrt(interval), x3);
  return {r0, std::atanh(x0 / x3)};
}

std::array<double, 2> temporal_cartesian(const TemporalPolar& p) {
  return {p.r0 * std::sinh(p.theta0), p.r0 * std::cosh(p.theta0)};
}

SpatialPolar spatial_polar(double x1, double x2) { return {std::hypot(x1, x2), std::atan2(x1, x2)}; }

std::array<double, 2> spatial_cartesian(const SpatialPolar& p) {
  return {p.r1 * std::sin(p.theta1), p.r1 * std::cos(p.theta1)};
}

double arc_map(double r, double s, double R) {
  require_positive_radius(R, "R");
  return r * s / R;
}

double arc_map_inverse(double r, double s_tilde, double R) {
  require_positive_radius(R, "R");
  if (r == 0.0) {
    throw Error(ErrorKind::NonpositiveRadiusParameter, "arc_map_inverse is undefined at r = 0");
  }
  return R * s_tilde / r;
}

RotatedBasis fixed_basis() {
  return {{Reflector::of(Biquaternion::unit(0)), Reflector::of(Biquaternion::unit(1)),
           Reflector::of(Biquaternion::unit(2)), Reflector::of(Biquaternion::unit(3))}};
}

RotatedBasis rotate_temporal_basis(double theta0) {
  // cos(-iθ) = cosh θ, sin(-iθ) = -i sinh θ
  const Complex c = std::cosh(theta0);
  const Complex s = -kI * std::sinh(theta0);
  const Biquaternion i0 = Biquaternion::unit(0);
  const Biquaternion i3 = Biquaternion::unit(3);
  RotatedBasis b = fixed_basis();
  b.e[0] = Reflector::of(c * i0 - s * i3);
  b.e[3] = Reflector::of(s * i0 + c * i3);
  return b;
}

RotatedBasis rotate_spatial_basis(double theta1) {
  const double c = std::cos(theta1);
  const double s = std::sin(theta1);
  const Biquaternion i1 = Biquaternion::unit(1);
  const Biquaternion i2 = Biquaternion::unit(2);
  RotatedBasis b = fixed_basis();
  b.e[1] = Reflector::of(c * i1 - s * i2);
  b.e[2] = Reflector::of(s * i1 + c * i2);
  return b;
}

double anticommutation_defect(const RotatedBasis& basis) {
  double worst = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    worst = std::max(worst, magnitude(basis.e[mu] * basis.e[mu] - DiagPair::identity()));
    for (std::size_t nu = mu + 1; nu < 4; ++nu) {
      worst = std::max(worst, magnitude(basis.e[mu] * basis.e[nu] + basis.e[nu] * basis.e[mu]));
    }
  }
  return worst;
}

std::array<std::array<double, 2>, 2> temporal_derivative_matrix(double theta0) {
  const double ch = std::cosh(theta0);
  const double sh = std::sinh(theta0);
  return {{{ch, -sh}, {-sh, ch}}};
}

Biquaternion scale_potential(const Biquaternion& potential, double r1, double R1) {
  require_positive_radius(R1, "R1");
  return potential * (r1 / R1);
}

namespace {

Point4 to_minkowski(const Point4& p, const SpaceChart& chart) {
  Point4 x = p;
  if (chart.has_temporal_circle()) {
    // (s0, ., ., r0) -> (x0, ., ., x3)
    const double R0 = *chart.R0();
    const double r0 = p[3];
    const double theta0 = p[0] / R0;
    const auto [x0, x3] = temporal_cartesian({r0, theta0});
    x[0] = x0;
    x[3] = x3;
  }
  if (chart.has_spatial_circle()) {
    // (., s1, r1, .) -> (., x1, x2, .)
    const double R1 = *chart.R1();
    const double r1 = p[2];
    const double theta1 = p[1] / R1;
    const auto [x1, x2] = spatial_cartesian({r1, theta1});
    x[1] = x1;
    x[2] = x2;
  }
  return x;
}

Point4 from_minkowski(const Point4& x, const SpaceChart& chart) {
  Point4 p = x;
  if (chart.has_temporal_circle()) {
    const TemporalPolar tp = temporal_polar(x[0], x[3]);
    const double s0_tilde = tp.r0 * tp.theta0;
    p[0] = arc_map_inverse(tp.r0, s0_tilde, *chart.R0());
    p[3] = tp.r0;
  }
  if (chart.has_spatial_circle()) {
    const SpatialPolar sp = spatial_polar(x[1], x[2]);
    const double s1_tilde = sp.r1 * sp.theta1;
    p[1] = sp.r1 == 0.0 ? 0.0 : arc_map_inverse(sp.r1, s1_tilde, *chart.R1());
    p[2] = sp.r1;
  }
  return p;
}

}  // namespace

Point4 chart_map(const Point4& point, const SpaceChart& from, const SpaceChart& to) {
  return from_minkowski(to_minkowski(point, from), to);
}

std::string to_json(const ChartPoint& p) {
  std::string out = "{\"chart\":" + json_string(to_string(p.chart.kind())) + ",\"coords\":[";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) out += ',';
    out += json_number(p.coords[k]);
  }
  out += ']';
  if (p.chart.R0()) out += ",\"R0\":" + json_number(*p.chart.R0());
  if (p.chart.R1()) out += ",\"R1\":" + json_number(*p.chart.R1());
  out += '}';
  return out;
}

ChartPoint chart_point_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidChart, std::string("malformed chart point JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("chart") || !j.contains("coords") || !j["coords"].is_array() ||
      j["coords"].size() != 4) {
    throw Error(ErrorKind::InvalidChart, "chart point needs \"chart\" and a 4-element \"coords\" array");
  }
  std::optional<double> R0;
  std::optional<double> R1;
  if (j.contains("R0") && !j["R0"].is_null()) R0 = j["R0"].get<double>();
  if (j.contains("R1") && !j["R1"].is_null()) R1 = j["R1"].get<double>();
  Point4 coords{};
  for (std::size_t k = 0; k < 4; ++k) coords[k] = j["coords"][k].get<double>();
  return {SpaceChart::create(parse_chart_kind(j["chart"].get<std::string>()), R0, R1), coords};
}

}  // namespace bqdirac

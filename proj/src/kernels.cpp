#include "bqdirac/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace bqdirac {

namespace {

double rotor_error(const Biquaternion& x, const TachyonRotor& rotor) {
  double e = 0.0;
  for (const auto kind : {SandwichKind::direct, SandwichKind::conjugate}) {
    e = std::max(e, max_abs_diff(tachyon_quaternion(x, rotor, kind), tachyon_componentwise(x, kind)));
  }
  return e;
}

double trip_error(const Point4& p, const SpaceChart& from, const SpaceChart& to) {
  const Point4 back = chart_map(chart_map(p, from, to), to, from);
  double e = 0.0;
  for (int k = 0; k < 4; ++k) e = std::max(e, std::abs(back[k] - p[k]));
  return e;
}

}  // namespace

double rotor_agreement_error(std::span<const Biquaternion> xs, const TachyonRotor& rotor) {
  const auto n = static_cast<long>(xs.size());
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (long k = 0; k < n; ++k) worst = std::max(worst, rotor_error(xs[k], rotor));
  return worst;
}

double rotor_agreement_error_serial(std::span<const Biquaternion> xs, const TachyonRotor& rotor) {
  double worst = 0.0;
  for (const auto& x : xs) worst = std::max(worst, rotor_error(x, rotor));
  return worst;
}

double round_trip_error(std::span<const Point4> points, const SpaceChart& from, const SpaceChart& to) {
  const auto n = static_cast<long>(points.size());
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (long k = 0; k < n; ++k) worst = std::max(worst, trip_error(points[k], from, to));
  return worst;
}

double round_trip_error_serial(std::span<const Point4> points, const SpaceChart& from, const SpaceChart& to) {
  double worst = 0.0;
  for (const auto& p : points) worst = std::max(worst, trip_error(p, from, to));
  return worst;
}

}  // namespace bqdirac

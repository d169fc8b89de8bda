#pragma once

// Independent evaluations the library results are checked against. Nothing
// here calls library arithmetic; inputs and outputs are plain coefficients.

#include <array>
#include <cmath>
#include <complex>

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/reflector.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat2 = std::array<std::array<C, 2>, 2>;
using Mat4 = std::array<std::array<C, 4>, 4>;

inline constexpr C I{0.0, 1.0};

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// i_0 -> identity, i_k -> -i·σ_k. Then i_1 i_2 = i_3 and every i_k squares to -1.
inline Mat2 to_mat(const bqdirac::Biquaternion& q) {
  const C a0 = q[0], a1 = q[1], a2 = q[2], a3 = q[3];
  return {{{a0 - I * a3, -I * a1 - a2}, {-I * a1 + a2, a0 + I * a3}}};
}

inline bqdirac::Biquaternion from_mat(const Mat2& m) {
  const C a0 = (m[0][0] + m[1][1]) / 2.0;
  const C a3 = (m[1][1] - m[0][0]) / (2.0 * I);
  const C a1 = (m[0][1] + m[1][0]) / (-2.0 * I);
  const C a2 = (m[1][0] - m[0][1]) / 2.0;
  return {a0, a1, a2, a3};
}

// The quaternion conjugate is the classical adjugate of the 2x2 image.
inline Mat2 adjugate(const Mat2& m) { return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; }

inline C det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline double max_diff(const Mat2& a, const Mat2& b) {
  double e = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e = std::max(e, std::abs(a[i][j] - b[i][j]));
  return e;
}

inline double max_diff(const Mat4& a, const Mat4& b) {
  double e = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e = std::max(e, std::abs(a[i][j] - b[i][j]));
  return e;
}

inline Mat4 blocks(const Mat2& tl, const Mat2& tr, const Mat2& bl, const Mat2& br) {
  Mat4 m{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m[i][j] = tl[i][j];
      m[i][j + 2] = tr[i][j];
      m[i + 2][j] = bl[i][j];
      m[i + 2][j + 2] = br[i][j];
    }
  }
  return m;
}

inline Mat4 to_mat(const bqdirac::Reflector& r) { return blocks(Mat2{}, to_mat(r.top), to_mat(r.bottom), Mat2{}); }

inline Mat4 to_mat(const bqdirac::DiagPair& d) { return blocks(to_mat(d.upper), Mat2{}, Mat2{}, to_mat(d.lower)); }

// Sommerfeld fine-structure energy E/m written with γ = √(k² - α²) and
// evaluated in long double: (n_r + γ)/√((n_r + γ)² + α²).
inline double sommerfeld_energy(int k, int n_r, double alpha) {
  const long double a = alpha;
  const long double g = std::sqrt(static_cast<long double>(k) * k - a * a);
  const long double num = n_r + g;
  return static_cast<double>(num / std::sqrt(num * num + a * a));
}

// E/m to fourth order in α.
inline double sommerfeld_fourth_order(int n, int k, double alpha) {
  const double a2 = alpha * alpha;
  const double nn = static_cast<double>(n) * n;
  return 1.0 - a2 / (2 * nn) - a2 * a2 / (2 * nn * nn) * (static_cast<double>(n) / k - 0.75);
}

}  // namespace oracle

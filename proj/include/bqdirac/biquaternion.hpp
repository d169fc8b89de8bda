#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>

namespace bqdirac {

using Complex = std::complex<double>;

/// The complex scalar unit, distinct from the quaternion unit i_1.
inline constexpr Complex kI{0.0, 1.0};

/// Real four-vector in natural units (hbar = c = 1).
struct FourVector {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  friend bool operator==(const FourVector&, const FourVector&) = default;
};

/// Four-vector whose components may have been complexified, e.g. by the
/// tachyonic transformation.
struct ComplexFourVector {
  Complex z0{};
  Complex z1{};
  Complex z2{};
  Complex z3{};

  static ComplexFourVector from_real(const FourVector& x) { return {x.x0, x.x1, x.x2, x.x3}; }

  friend bool operator==(const ComplexFourVector&, const ComplexFourVector&) = default;
};

/// Quaternion with complex coefficients, c0*i_0 + c1*i_1 + c2*i_2 + c3*i_3.
///
/// The quaternion units obey i_r^2 = -1 and i_1 i_2 = i_3 cyclically. The
/// complex unit commutes with every quaternion unit. Quaternion conjugation
/// (‡) negates c1..c3 and leaves the complex coefficients themselves alone.
class Biquaternion {
 public:
  constexpr Biquaternion() = default;
  constexpr Biquaternion(Complex c0, Complex c1 = {}, Complex c2 = {}, Complex c3 = {})
      : c_{c0, c1, c2, c3} {}

  /// i_mu for mu in 0..3.
  static Biquaternion unit(std::size_t mu);
  static Biquaternion zero() { return {}; }
  static Biquaternion one() { return {1.0}; }

  const Complex& operator[](std::size_t k) const { return c_[k]; }
  Complex& operator[](std::size_t k) { return c_[k]; }

  const std::array<Complex, 4>& coefficients() const { return c_; }

  Complex scalar() const { return c_[0]; }
  bool is_scalar() const { return c_[1] == Complex{} && c_[2] == Complex{} && c_[3] == Complex{}; }

  Biquaternion& operator+=(const Biquaternion& b);
  Biquaternion& operator-=(const Biquaternion& b);
  Biquaternion& operator*=(Complex s);

  friend Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
  friend Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
  friend Biquaternion operator-(Biquaternion a) { return a *= -1.0; }
  friend Biquaternion operator*(Biquaternion a, Complex s) { return a *= s; }
  friend Biquaternion operator*(Complex s, Biquaternion a) { return a *= s; }
  friend Biquaternion operator*(Biquaternion a, double s) { return a *= s; }
  friend Biquaternion operator*(double s, Biquaternion a) { return a *= s; }
  friend Biquaternion operator/(Biquaternion a, Complex s) { return a *= 1.0 / s; }

  friend bool operator==(const Biquaternion&, const Biquaternion&) = default;

 private:
  std::array<Complex, 4> c_{};
};

/// Hamilton product with complex scalars commuting through.
Biquaternion mul(const Biquaternion& a, const Biquaternion& b);
inline Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) { return mul(a, b); }

/// Quaternion (‡) conjugation.
Biquaternion conj(const Biquaternion& a);

/// i_0 coefficient of a·a‡, i.e. c0² + c1² + c2² + c3² (no complex conjugation).
Complex norm_form(const Biquaternion& a);

/// a‡ / norm_form(a); throws SingularBiquaternion for null elements.
Biquaternion inverse(const Biquaternion& a);

/// Embeds X as X0/i + i_1 X1 + i_2 X2 + i_3 X3.
Biquaternion embed(const FourVector& x);
Biquaternion embed(const ComplexFourVector& x);

/// Inverse of embed: z0 = i*c0, z_r = c_r.
ComplexFourVector unembed(const Biquaternion& a);

/// Euclidean magnitude sqrt(sum |c_k|^2), used for residual and error norms.
double magnitude(const Biquaternion& a);

/// Largest componentwise modulus of a - b.
double max_abs_diff(const Biquaternion& a, const Biquaternion& b);

inline constexpr double kDefaultEqualityTol = 1e-12;

bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol = kDefaultEqualityTol);

std::ostream& operator<<(std::ostream& os, const Biquaternion& a);

}  // namespace bqdirac

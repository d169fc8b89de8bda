#include "bqdirac/biquaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "bqdirac/errors.hpp"

namespace bqdirac {

Biquaternion Biquaternion::unit(std::size_t mu) {
  Biquaternion u;
  u.c_.at(mu) = 1.0;
  return u;
}

Biquaternion& Biquaternion::operator+=(const Biquaternion& b) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += b.c_[k];
  return *this;
}

Biquaternion& Biquaternion::operator-=(const Biquaternion& b) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= b.c_[k];
  return *this;
}

Biquaternion& Biquaternion::operator*=(Complex s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Biquaternion mul(const Biquaternion& a, const Biquaternion& b) {
  // (a0 + a)(b0 + b) = a0 b0 - a.b + a0 b + b0 a + a x b
  const Complex a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3];
  const Complex b0 = b[0], b1 = b[1], b2 = b[2], b3 = b[3];
  return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
          a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
          a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
          a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1};
}

Biquaternion conj(const Biquaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Complex norm_form(const Biquaternion& a) {
  return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
}

Biquaternion inverse(const Biquaternion& a) {
  const Complex n = norm_form(a);
  if (n == Complex{}) {
    throw Error(ErrorKind::SingularBiquaternion, "element has zero norm form and no inverse");
  }
  return conj(a) / n;
}

Biquaternion embed(const FourVector& x) { return {-kI * x.x0, x.x1, x.x2, x.x3}; }

Biquaternion embed(const ComplexFourVector& x) { return {-kI * x.z0, x.z1, x.z2, x.z3}; }

ComplexFourVector unembed(const Biquaternion& a) { return {kI * a[0], a[1], a[2], a[3]}; }

double magnitude(const Biquaternion& a) {
  double s = 0.0;
  for (const auto& c : a.coefficients()) s += std::norm(c);
  return std::sqrt(s);
}

double max_abs_diff(const Biquaternion& a, const Biquaternion& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Biquaternion& a) {
  return os << '[' << a[0] << ", " << a[1] << ", " << a[2] << ", " << a[3] << ']';
}

}  // namespace bqdirac

#include "bqdirac/reflector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bqdirac/errors.hpp"

namespace bqdirac {

DiagPair reflector_mul(const Reflector& a, const Reflector& b) {
  return {a.top * b.bottom, a.bottom * b.top};
}

Reflector operator*(const DiagPair& d, const Reflector& r) { return {d.upper * r.top, d.lower * r.bottom}; }

Reflector operator*(const Reflector& r, const DiagPair& d) { return {r.top * d.lower, r.bottom * d.upper}; }

DiagPair operator*(const DiagPair& a, const DiagPair& b) { return {a.upper * b.upper, a.lower * b.lower}; }

Reflector operator+(const Reflector& a, const Reflector& b) { return {a.top + b.top, a.bottom + b.bottom}; }

Reflector operator-(const Reflector& a, const Reflector& b) { return {a.top - b.top, a.bottom - b.bottom}; }

Reflector operator*(Complex s, const Reflector& r) { return {s * r.top, s * r.bottom}; }

DiagPair operator+(const DiagPair& a, const DiagPair& b) { return {a.upper + b.upper, a.lower + b.lower}; }

DiagPair operator-(const DiagPair& a, const DiagPair& b) { return {a.upper - b.upper, a.lower - b.lower}; }

double magnitude(const DiagPair& d) { return std::max(magnitude(d.upper), magnitude(d.lower)); }

double magnitude(const Reflector& r) { return std::max(magnitude(r.top), magnitude(r.bottom)); }

bool is_unit(const Biquaternion& r, double tol) {
  return max_abs_diff(r * conj(r), Biquaternion::one()) <= tol;
}

namespace {

void require_unit(const Biquaternion& r, double tol) {
  if (!is_unit(r, tol)) {
    std::ostringstream msg;
    msg << "rotor " << r << " has r*r^conj = " << norm_form(r) << ", expected 1";
    throw Error(ErrorKind::NonUnitRotor, msg.str());
  }
}

}  // namespace

Biquaternion sandwich(const Biquaternion& r, const Biquaternion& x, double tol) {
  require_unit(r, tol);
  return r * x * r;
}

Reflector sandwich(const Biquaternion& r, const Reflector& x, double tol) {
  require_unit(r, tol);
  const Biquaternion rc = conj(r);
  return {r * x.top * r, rc * x.bottom * rc};
}

DerivativeOperator central_difference(double h) {
  return [h](const Field& f, const Point4& p) {
    Gradient g;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      Point4 fwd = p;
      Point4 bwd = p;
      fwd[mu] += h;
      bwd[mu] -= h;
      g[mu] = (f(fwd) - f(bwd)) * (0.5 / h);
    }
    return g;
  };
}

Biquaternion apply_d(const Gradient& grad, bool conjugate) {
  const double s = conjugate ? -1.0 : 1.0;
  return Biquaternion(kI * grad[0][0], kI * grad[0][1], kI * grad[0][2], kI * grad[0][3]) +
         s * (Biquaternion::unit(1) * grad[1] + Biquaternion::unit(2) * grad[2] +
              Biquaternion::unit(3) * grad[3]);
}

namespace {

DiagPair assemble_lhs(const Gradient& g1, const Gradient& g2, const Biquaternion& potential, double charge,
                      const Biquaternion& phi1, const Biquaternion& phi2) {
  const Complex iec = kI * charge;
  return {apply_d(g2, false) - iec * (potential * phi2),
          apply_d(g1, true) - iec * (conj(potential) * phi1)};
}

}  // namespace

DiagPair dirac_lhs(const DerivativeOperator& d_apply, const Biquaternion& potential, double charge,
                   const WaveFunction& phi, const Point4& point) {
  return assemble_lhs(d_apply(phi.phi1, point), d_apply(phi.phi2, point), potential, charge,
                      phi.phi1(point), phi.phi2(point));
}

DiagPair dirac_lhs_analytic(const Biquaternion& potential, double charge, const WaveFunction& phi,
                            const Point4& point) {
  return assemble_lhs(phi.grad1(point), phi.grad2(point), potential, charge, phi.phi1(point),
                      phi.phi2(point));
}

DiagPair dirac_rhs(const WaveFunction& phi, const Biquaternion& mass_term, const Point4& point) {
  const Reflector mass_reflector{mass_term, -conj(mass_term)};
  return phi.at(point) * mass_reflector;
}

}  // namespace bqdirac

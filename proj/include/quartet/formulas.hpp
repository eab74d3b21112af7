#pragma once

// Field-generic forms of the core relations. Instantiated with Rat for
// numbers and with RatFn for symbolic checks in one parameter.

namespace quartet::formulas {

/// pq(p^2 + q^2) - a rs(r^2 + s^2); zero exactly for solutions of the
/// Euler-substituted equation.
template <class F>
F pqrs_residual(const F& p, const F& q, const F& r, const F& s, const F& a) {
  return p * q * (p * p + q * q) - a * r * s * (r * r + s * s);
}

/// Resolvent residual a^2 rho^3 t^4 + (3 a rho^2 - 1) t^2 + a rho^3 - omega^2.
template <class F>
F resolvent_residual(const F& a, const F& rho, const F& t, const F& omega) {
  const F t2 = t * t;
  const F rho3 = rho * rho * rho;
  return a * a * rho3 * t2 * t2 + (F(3) * a * rho * rho - F(1)) * t2 + a * rho3 - omega * omega;
}

template <class F>
struct Pqrs {
  F p, q, r, s, a;
};

/// p = t(a rho t^2 + 1), q = omega, r = omega t, s = t^2 + rho.
template <class F>
Pqrs<F> pqrs_from_state(const F& a, const F& rho, const F& t, const F& omega) {
  return {t * (a * rho * t * t + F(1)), omega, omega * t, t * t + rho, a};
}

/// rho = 1 specialisation with omega = a t^2 - alpha:
/// a = (alpha^2 + t^2) / ((2 alpha + 3) t^2 + 1).
template <class F>
F rho1_coefficient(const F& alpha, const F& t) {
  return (alpha * alpha + t * t) / ((F(2) * alpha + F(3)) * t * t + F(1));
}

template <class F>
Pqrs<F> rho1_pqrs(const F& alpha, const F& t) {
  const F a = rho1_coefficient(alpha, t);
  const F omega = a * t * t - alpha;
  return {t * (a * t * t + F(1)), omega, t * omega, t * t + F(1), a};
}

}  // namespace quartet::formulas

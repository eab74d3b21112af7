#pragma once

// Step-by-step constructions of the a = 1 and a = -1 families from the
// resolvent. Each step is computed, not transcribed, and every relation the
// chain relies on is re-checked on the way. Instantiated for Rat (numeric
// parameter) and RatFn (symbolic parameter).

#include "quartet/exactnum.hpp"
#include "quartet/poly.hpp"

namespace quartet {

enum class Case1Variant { Linear, Quadratic };

/// a = 1 with rho = 1 + z and omega an ansatz polynomial in z whose low-order
/// terms cancel the resolvent's; the surviving terms fix z.
template <class F>
struct Case1Derivation {
  F t;
  Case1Variant variant;
  F z, rho, omega;
};

/// Quadratic variant rejects t in {0, 1, -1} with DomainError.
template <class F>
Case1Derivation<F> derive_case1(const F& t, Case1Variant variant);

/// a = -1 chain in the parameter n.
template <class F>
struct Case2Derivation {
  F n;
  F v;      // t = (rho + v)/rho
  F k;      // z = 1 + k
  F z;      // omega = (rho^2 + 1) z / rho
  F rho;
  F t;
  F omega;
  F delta;  // Delta^2 = (rho^2 + 1)^2 (4 rho^2 + 1) + 4 rho^3 omega^2
  int delta_sign;  // branch of t^2 = (3 rho^2 + 1 +/- Delta)/(2 rho^3) that holds
};

/// DomainError naming the vanishing denominator (n = 0, n^2 v^2 - 2v - (n^2 - 1),
/// rho n^2 - 1, ...).
template <class F>
Case2Derivation<F> derive_case2(const F& n);

extern template Case1Derivation<Rat> derive_case1<Rat>(const Rat&, Case1Variant);
extern template Case1Derivation<RatFn> derive_case1<RatFn>(const RatFn&, Case1Variant);
extern template Case2Derivation<Rat> derive_case2<Rat>(const Rat&);
extern template Case2Derivation<RatFn> derive_case2<RatFn>(const RatFn&);

}  // namespace quartet

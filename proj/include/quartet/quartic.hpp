#pragma once

// Data model of A^4 + aB^4 = C^4 + aD^4: the Euler substitution to
// (p, q, r, s), the (rho, t, omega) parametrisation, residuals, the scaling
// law, and canonical forms under the equation's symmetries.

#include <array>
#include <string>
#include <vector>

#include "quartet/exactnum.hpp"

namespace quartet {

enum class Mode { Raw, Canonical };

struct Quadruple {
  Int A, B, C, D;
  Rat a;

  /// Throws DomainError when a == 0 or all entries are zero.
  Quadruple(Int A_, Int B_, Int C_, Int D_, Rat a_);

  std::array<Int, 4> entries() const { return {A, B, C, D}; }
  std::string str() const;
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

struct PqrsTuple {
  Rat p, q, r, s, a;
  friend bool operator==(const PqrsTuple&, const PqrsTuple&) = default;
};

struct RhoState {
  Rat a, rho, t, omega;
  friend bool operator==(const RhoState&, const RhoState&) = default;
};

struct XyState {
  Rat x, y, t, a;
  friend bool operator==(const XyState&, const XyState&) = default;
};

/// (A, B, C, D) = (p + q, r - s, p - q, r + s), denominators cleared and
/// gcd removed. Canonical mode additionally applies canonicalize().
Quadruple pqrs_to_quadruple(const PqrsTuple& ps, Mode mode = Mode::Raw);
PqrsTuple quadruple_to_pqrs(const Quadruple& q);

/// A^4 + aB^4 - C^4 - aD^4.
Rat verify_quadruple(const Quadruple& q);
/// pq(p^2 + q^2) - a rs(r^2 + s^2).
Rat verify_pqrs(const PqrsTuple& ps);
Rat eq7_residual(const RhoState& st);

/// Requires a zero resolvent residual (PreconditionError otherwise).
PqrsTuple state_to_pqrs(const RhoState& st);
/// x = (t^2 + rho)/omega, y = (a rho t^2 + 1)/omega. omega == 0 throws.
XyState state_to_xy(const RhoState& st);
/// (xy + 1) - rho (a x^2 + y^2).
Rat rho_relation_residual(const XyState& xy, const Rat& rho);
/// (a x^3 - y)/(y^3 - a x); DomainError when y^3 == a x.
Rat xy_t_squared(const XyState& xy);

/// (a c^-4, rho c^2, t c, omega c). The resolvent residual scales by c^2.
RhoState scale_state(const RhoState& st, const Rat& c);

/// Coefficient normalisation: of a and 1/a (the latter via the pair swap
/// (B, A, D, C)), keep whichever has the smaller integral fourth-power-free
/// core and absorb the fourth power into B and D. On a tie both survive.
std::vector<Quadruple> coefficient_representatives(const Quadruple& q);

/// Every element of q's symmetry orbit (absolute values, normalised
/// coefficient): side swap always; within-side swaps when the coefficient
/// is 1, and their conjugate by B <-> D when it is -1.
std::vector<Quadruple> orbit(const Quadruple& q);

/// Lexicographically greatest orbit element.
Quadruple canonicalize(const Quadruple& q);

/// Some orbit element has A == C and B == D.
bool is_trivial(const Quadruple& q);

/// (A, D, C, B) with coefficient -a; defined for any a < 0.
Quadruple positive_coefficient_form(const Quadruple& q);
/// a == -1 only: A^4 - B^4 = C^4 - D^4 rewritten as A^4 + D^4 = C^4 + B^4.
Quadruple sum_form(const Quadruple& q);

}  // namespace quartet

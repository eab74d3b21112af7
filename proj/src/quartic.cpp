#include "quartet/quartic.hpp"

#include <algorithm>

#include "quartet/formulas.hpp"

namespace quartet {

namespace {

Rat fourth(const Int& v) { return Rat(v).pow(4); }

using Tuple = std::array<Int, 4>;

Quadruple make(const Tuple& e, const Rat& a) { return Quadruple(e[0], e[1], e[2], e[3], a); }

Tuple absolute(const Quadruple& q) { return {abs(q.A), abs(q.B), abs(q.C), abs(q.D)}; }

// Permutations of (A, B, C, D) admitted for coefficient 1: side swap and
// within-side swaps.
constexpr std::array<std::array<int, 4>, 8> kUnitGroup{{
    {0, 1, 2, 3}, {2, 3, 0, 1}, {1, 0, 2, 3}, {0, 1, 3, 2},
    {1, 0, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}, {3, 2, 1, 0},
}};

Tuple permute(const Tuple& e, const std::array<int, 4>& perm) {
  return {e[perm[0]], e[perm[1]], e[perm[2]], e[perm[3]]};
}

Tuple swap_b_d(const Tuple& e) { return {e[0], e[3], e[2], e[1]}; }

// Absorb the fourth-power part of a into (B, D); coefficient becomes the
// integral fourth-power-free core.
Quadruple absorb(const Tuple& e, const Rat& a) {
  auto [core, scale] = fourth_power_free_rat(a);
  auto ints = clear_and_normalize({Rat(e[0]), Rat(e[1]) * scale, Rat(e[2]), Rat(e[3]) * scale});
  return Quadruple(ints[0], ints[1], ints[2], ints[3], core);
}

}  // namespace

Quadruple::Quadruple(Int A_, Int B_, Int C_, Int D_, Rat a_)
    : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)), D(std::move(D_)), a(std::move(a_)) {
  if (a.is_zero()) throw DomainError("quadruple coefficient a must be nonzero");
  if (A == 0 && B == 0 && C == 0 && D == 0) throw DomainError("all-zero quadruple");
}

std::string Quadruple::str() const {
  return "(" + to_string(A) + ", " + to_string(B) + ", " + to_string(C) + ", " + to_string(D) +
         "; a=" + a.str() + ")";
}

Quadruple pqrs_to_quadruple(const PqrsTuple& ps, Mode mode) {
  if (ps.p.is_zero() && ps.q.is_zero() && ps.r.is_zero() && ps.s.is_zero()) {
    throw DomainError("pqrs_to_quadruple: p, q, r, s all zero");
  }
  const std::vector<Rat> lin{ps.p + ps.q, ps.r - ps.s, ps.p - ps.q, ps.r + ps.s};
  if (std::all_of(lin.begin(), lin.end(), [](const Rat& v) { return v.is_zero(); })) {
    throw DomainError("pqrs_to_quadruple: degenerate all-zero quadruple");
  }
  auto e = clear_and_normalize(lin);
  Quadruple out(e[0], e[1], e[2], e[3], ps.a);
  return mode == Mode::Canonical ? canonicalize(out) : out;
}

PqrsTuple quadruple_to_pqrs(const Quadruple& q) {
  const Rat half(1, 2);
  return {Rat(Int(q.A + q.C)) * half, Rat(Int(q.A - q.C)) * half, Rat(Int(q.D + q.B)) * half,
          Rat(Int(q.D - q.B)) * half, q.a};
}

Rat verify_quadruple(const Quadruple& q) {
  return fourth(q.A) + q.a * fourth(q.B) - fourth(q.C) - q.a * fourth(q.D);
}

Rat verify_pqrs(const PqrsTuple& ps) {
  return formulas::pqrs_residual(ps.p, ps.q, ps.r, ps.s, ps.a);
}

Rat eq7_residual(const RhoState& st) {
  return formulas::resolvent_residual(st.a, st.rho, st.t, st.omega);
}

PqrsTuple state_to_pqrs(const RhoState& st) {
  const Rat residual = eq7_residual(st);
  if (!residual.is_zero()) {
    throw PreconditionError("state_to_pqrs: resolvent residual is " + residual.str() + ", not 0");
  }
  auto f = formulas::pqrs_from_state(st.a, st.rho, st.t, st.omega);
  return {f.p, f.q, f.r, f.s, f.a};
}

XyState state_to_xy(const RhoState& st) {
  if (st.omega.is_zero()) throw DomainError("state_to_xy: omega is zero");
  const Rat t2 = st.t * st.t;
  return {(t2 + st.rho) / st.omega, (st.a * st.rho * t2 + Rat(1)) / st.omega, st.t, st.a};
}

Rat rho_relation_residual(const XyState& xy, const Rat& rho) {
  return xy.x * xy.y + Rat(1) - rho * (xy.a * xy.x * xy.x + xy.y * xy.y);
}

Rat xy_t_squared(const XyState& xy) {
  const Rat den = xy.y.pow(3) - xy.a * xy.x;
  if (den.is_zero()) throw DomainError("xy_t_squared: y^3 - a x vanishes");
  return (xy.a * xy.x.pow(3) - xy.y) / den;
}

RhoState scale_state(const RhoState& st, const Rat& c) {
  if (c.is_zero()) throw DomainError("scale_state: scale factor is zero");
  return {st.a * c.pow(-4), st.rho * c * c, st.t * c, st.omega * c};
}

std::vector<Quadruple> coefficient_representatives(const Quadruple& q) {
  const Tuple e = q.entries();
  Quadruple direct = absorb(e, q.a);
  Quadruple swapped = absorb({e[1], e[0], e[3], e[2]}, q.a.inverse());
  const Rat d = direct.a.abs();
  const Rat s = swapped.a.abs();
  if (d < s) return {direct};
  if (s < d) return {swapped};
  return {direct, swapped};
}

std::vector<Quadruple> orbit(const Quadruple& q) {
  std::vector<Tuple> elems;
  Rat coefficient;
  for (const auto& rep : coefficient_representatives(q)) {
    coefficient = rep.a;
    const Tuple e = absolute(rep);
    if (coefficient == Rat(1)) {
      for (const auto& g : kUnitGroup) elems.push_back(permute(e, g));
    } else if (coefficient == Rat(-1)) {
      for (const auto& g : kUnitGroup) elems.push_back(swap_b_d(permute(swap_b_d(e), g)));
    } else {
      elems.push_back(e);
      elems.push_back({e[2], e[3], e[0], e[1]});
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<Quadruple> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(make(e, coefficient));
  return out;
}

Quadruple canonicalize(const Quadruple& q) { return orbit(q).back(); }

bool is_trivial(const Quadruple& q) {
  for (const auto& e : orbit(q)) {
    if (e.A == e.C && e.B == e.D) return true;
  }
  return false;
}

Quadruple positive_coefficient_form(const Quadruple& q) {
  if (q.a.sign() > 0) return q;
  return Quadruple(q.A, q.D, q.C, q.B, -q.a);
}

Quadruple sum_form(const Quadruple& q) {
  if (q.a != Rat(-1)) throw DomainError("sum_form requires a = -1, got a = " + q.a.str());
  return positive_coefficient_form(q);
}

}  // namespace quartet

#pragma once

// Registry of the parametric solution families, their symbolic identity
// checks, the rho = 1 construction, and parameter recovery.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quartet/exactnum.hpp"
#include "quartet/formulas.hpp"
#include "quartet/poly.hpp"
#include "quartet/quartic.hpp"

namespace quartet {

enum class FamilyId {
  Euler1,
  Euler2,
  NegA16,
  Deg13,
  Deg15,
  Hayashi,
  Rho1,
  T6_1,
  T6_2,
  T6_3,
  T6_4,
  T6_5,
  T6_6,
  T6_7,
  T6_8,
  T6_9,
  T6_10,
  T6_12,
};

/// Lower-case CLI tag, e.g. "euler1", "nega16", "t6_12".
std::string_view family_tag(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view tag);

/// The 17 single-parameter families (everything except Rho1), in registry order.
const std::vector<FamilyId>& registered_families();

struct FamilySpec {
  FamilyId id;
  std::string description;
  std::string param;  // "t", "n" or "u"
  RatFn p, q, r, s, a;
};

/// Throws DomainError for Rho1, which has two parameters (see rho1_solve).
const FamilySpec& family_spec(FamilyId id);

/// pq(p^2 + q^2) den(a) - num(a) rs(r^2 + s^2), reduced.
RatFn identity_residual(const FamilySpec& spec);
RatFn identity_residual(FamilyId id);

/// Second, evaluation-only route: the residual vanishes at `points` sample
/// parameters (poles skipped) and at enough points to bound its degree.
bool identity_holds_numerically(const FamilySpec& spec, std::size_t points = 20);

PqrsTuple eval_spec(const FamilySpec& spec, const Rat& param);
/// Pole -> DomainError naming the vanishing denominator.
PqrsTuple eval_family(FamilyId id, const Rat& param);
Quadruple generate(FamilyId id, const Rat& param, Mode mode);

/// Two pqrs tuples describe the same solution: equal a, and
/// (p, q, r, s) = lambda * g(p', q', r', s') for some lambda and some g among
/// the swaps p <-> q, r <-> s and sign changes with sign(p)sign(q) = sign(r)sign(s).
template <class F>
bool pqrs_equivalent(const formulas::Pqrs<F>& x, const formulas::Pqrs<F>& y);

struct Rho1Params {
  Rat alpha;
  Rat t;
};

/// rho = 1 family: a = (alpha^2 + t^2)/((2 alpha + 3) t^2 + 1), then
/// p = t(a t^2 + 1), q = a t^2 - alpha, r = t q, s = t^2 + 1.
PqrsTuple rho1_solve(const Rho1Params& params);
formulas::Pqrs<RatFn> rho1_solve_symbolic(const RatFn& alpha, const RatFn& t);

/// One (alpha_i(u), t_i(u)) choice with its resulting coefficient a_i(u).
struct Table5Row {
  int index;
  RatFn alpha;
  RatFn t;
  RatFn a;
  FamilyId table6;
};
/// Rows 1..10 (row 11 is irrational and not represented).
const std::vector<Table5Row>& table5_rows();
const Table5Row& table5_row(int index);

/// (B + D)/(A - C); DomainError when A == C.
Rat recover_t(const Quadruple& q);

struct NRecovery {
  Rat x, y, rho, t, v;
  /// Rational roots of (v - 1) n^2 - n - 1 = 0.
  std::vector<Rat> candidates;
  /// Candidates that regenerate q's canonical class through NegA16.
  std::vector<Rat> values;
  /// (y - x)(y - 1)/(x - (y^2 + y + 1)), reported for comparison only.
  std::optional<Rat> footnote;
};
/// Requires a == -1 (PreconditionError), A != C and D != -B (DomainError).
NRecovery recover_n(const Quadruple& q);

// ---------------------------------------------------------------------------

template <class F>
bool pqrs_equivalent(const formulas::Pqrs<F>& x, const formulas::Pqrs<F>& y) {
  if (!(x.a == y.a)) return false;
  const std::array<F, 4> lhs{x.p, x.q, x.r, x.s};
  for (int swap_pq = 0; swap_pq < 2; ++swap_pq) {
    for (int swap_rs = 0; swap_rs < 2; ++swap_rs) {
      for (int signs = 0; signs < 16; ++signs) {
        std::array<int, 4> sg{};
        for (int i = 0; i < 4; ++i) sg[static_cast<std::size_t>(i)] = (signs >> i) & 1 ? -1 : 1;
        if (sg[0] * sg[1] != sg[2] * sg[3]) continue;
        std::array<F, 4> rhs{swap_pq ? y.q : y.p, swap_pq ? y.p : y.q, swap_rs ? y.s : y.r,
                             swap_rs ? y.r : y.s};
        for (std::size_t i = 0; i < 4; ++i) rhs[i] = F(sg[i]) * rhs[i];
        std::optional<F> lambda;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
          if (rhs[i].is_zero() || lhs[i].is_zero()) {
            ok = rhs[i].is_zero() && lhs[i].is_zero();
            continue;
          }
          F ratio = lhs[i] / rhs[i];
          if (!lambda) {
            lambda = ratio;
          } else {
            ok = (ratio == *lambda);
          }
        }
        if (ok && lambda) return true;
      }
    }
  }
  return false;
}

}  // namespace quartet

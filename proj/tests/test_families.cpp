#include <doctest.h>

#include <random>

#include "quartet/derive.hpp"
#include "quartet/families.hpp"

using namespace quartet;

namespace {

const Poly X = Poly::x();
const RatFn T = RatFn::x();

Quadruple Q(long A, long B, long C, long D, Rat a) { return Quadruple(A, B, C, D, std::move(a)); }

Quadruple from_state(const Rat& a, const Rat& rho, const Rat& t, const Rat& omega) {
  return pqrs_to_quadruple(state_to_pqrs({a, rho, t, omega}), Mode::Canonical);
}

formulas::Pqrs<RatFn> as_pqrs(const FamilySpec& s) { return {s.p, s.q, s.r, s.s, s.a}; }

// Distinct small rationals, drawn without repeats.
std::vector<Rat> random_params(std::mt19937& rng, std::size_t count) {
  std::uniform_int_distribution<int> n(-40, 40), d(1, 25);
  std::vector<Rat> out;
  while (out.size() < count) {
    Rat r(n(rng), d(rng));
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("registry transcriptions") {
  const FamilySpec& e1 = family_spec(FamilyId::Euler1);
  CHECK(e1.p == RatFn(Poly(2) * X * Poly{4, 0, 1, 0, 10, 0, 1}));
  CHECK(e1.q == RatFn(Poly{-1, 0, 17, 0, 17, 0, -1}));
  CHECK(e1.r == RatFn(X * Poly{-1, 0, 17, 0, 17, 0, -1}));
  CHECK(e1.s == RatFn(Poly{2, 0, 20, 0, 2, 0, 8}));
  CHECK(e1.a == RatFn(1));

  const FamilySpec& h = family_spec(FamilyId::Hayashi);
  CHECK(h.p.str("u") == "u^3 - 3u");
  CHECK(h.q.str("u") == "2u^2 - 2");
  CHECK(h.r.str("u") == "u^3 - u");
  CHECK(h.s == RatFn(2));
  CHECK(h.a.str("u") == "u^2 - 3");

  const FamilySpec& t61 = family_spec(FamilyId::T6_1);
  CHECK(t61.p.str("u") == "u^3 + 4u");
  CHECK(t61.q.str("u") == "u^2 - 2");
  CHECK(t61.r.str("u") == "u^3 - 2u");
  CHECK(t61.s.str("u") == "4u^2 + 4");
  CHECK(t61.a == RatFn(Rat(1, 4)));

  CHECK(family_spec(FamilyId::Euler2).q.str() ==
        "-t^12 + 214t^10 + 2481t^8 + 2804t^6 + 2481t^4 + 214t^2 - 1");

  CHECK(registered_families().size() == 17);
  CHECK_THROWS_AS(family_spec(FamilyId::Rho1), DomainError);
  for (FamilyId id : registered_families()) CHECK(parse_family(family_tag(id)) == id);
  CHECK_FALSE(parse_family("nosuch").has_value());
}

TEST_CASE("every registered identity holds, by both routes") {
  for (FamilyId id : registered_families()) {
    CAPTURE(family_tag(id));
    CHECK(is_identically_zero(identity_residual(id)));
    CHECK(identity_holds_numerically(family_spec(id)));
  }
}

TEST_CASE("a corrupted coefficient is caught") {
  FamilySpec bad = family_spec(FamilyId::Euler1);
  bad.q = RatFn(Poly{1, 0, 1} * Poly{-1, 0, 17, 0, -1});
  CHECK_FALSE(is_identically_zero(identity_residual(bad)));
  CHECK_FALSE(identity_holds_numerically(bad));
}

TEST_CASE("evaluation and generation") {
  CHECK(eval_family(FamilyId::Euler1, 3) == PqrsTuple{9312, 800, 2400, 6176, 1});
  CHECK(eval_family(FamilyId::NegA16, 1) == PqrsTuple{-110, 117, 198, 41, -1});
  CHECK(eval_family(FamilyId::Deg15, 1) == PqrsTuple{3826, 462, 4576, 273, 1});
  CHECK(generate(FamilyId::Euler1, Rat(5, 3), Mode::Raw) == Q(17332, 529, 6673, 17236, 1));
  CHECK(generate(FamilyId::NegA16, Rat(-1, 3), Mode::Raw) == Q(89841, 27879, -90829, -43307, -1));
  CHECK(generate(FamilyId::Deg13, 1, Mode::Raw) == Q(292, 193, 257, 256, 1));
  CHECK(generate(FamilyId::Deg15, 1, Mode::Raw) == Q(4288, 4303, 3364, 4849, 1));
  CHECK(generate(FamilyId::T6_3, 1, Mode::Canonical) == Q(4, 1, 2, 3, 3));
  CHECK(generate(FamilyId::Hayashi, Rat(7, 4), Mode::Canonical) == Q(542, 103, 514, 359, 1));
  CHECK(is_trivial(generate(FamilyId::Euler1, 1, Mode::Raw)));
  // p = s = 0 at t = 1
  CHECK(generate(FamilyId::Euler2, 1, Mode::Raw) == Q(1, 1, -1, 1, 1));
  CHECK(is_trivial(generate(FamilyId::Euler2, 1, Mode::Raw)));

  std::mt19937 rng(3);
  for (FamilyId id : registered_families()) {
    for (const Rat& u : random_params(rng, 5)) {
      CAPTURE(family_tag(id));
      CAPTURE(u.str());
      try {
        CHECK(verify_pqrs(eval_family(id, u)).is_zero());
        CHECK(verify_quadruple(generate(id, u, Mode::Raw)).is_zero());
      } catch (const DomainError&) {
        // pole or degenerate row
      }
    }
  }
}

TEST_CASE("case 1, linear ansatz") {
  const auto d = derive_case1(Rat(3), Case1Variant::Linear);
  CHECK(d.z == Rat(-24, 41));
  CHECK(d.rho == Rat(17, 41));
  CHECK(d.omega == Rat(50, 41));
  CHECK(pqrs_to_quadruple(state_to_pqrs({1, d.rho, 3, d.omega})) == Q(158, -59, 133, 134, 1));

  const auto s = derive_case1(T, Case1Variant::Linear);
  const RatFn t2 = T * T;
  CHECK(s.z == RatFn(-3) * (t2 - 1).pow(2) / (RatFn(4) * (t2 * t2 + 1)));
  CHECK(pqrs_equivalent(formulas::pqrs_from_state(RatFn(1), s.rho, T, s.omega),
                        as_pqrs(family_spec(FamilyId::Euler1))));
}

TEST_CASE("case 1, quadratic ansatz") {
  const auto s = derive_case1(T, Case1Variant::Quadratic);
  const RatFn t2 = T * T;
  // The root carries a plus sign; rho and omega then match the printed forms.
  CHECK(s.z == RatFn(8) * (t2 + 1).pow(2) * RatFn(Poly{-1, 0, 18, 0, -1}) /
                   (RatFn(9) * (t2 - 1).pow(4)));
  CHECK(s.rho == RatFn(Poly{1, 0, 92, 0, 326, 0, 92, 0, 1}) / (RatFn(9) * (t2 - 1).pow(4)));
  const FamilySpec& e2 = family_spec(FamilyId::Euler2);
  CHECK(s.omega == (t2 + 1) * e2.q / (RatFn(27) * (t2 - 1).pow(6)));
  CHECK(pqrs_equivalent(formulas::pqrs_from_state(RatFn(1), s.rho, T, s.omega), as_pqrs(e2)));

  const auto n3 = derive_case1(Rat(3), Case1Variant::Quadratic);
  CHECK(n3.rho == Rat(197, 72));
  CHECK(pqrs_to_quadruple(state_to_pqrs({1, n3.rho, 3, n3.omega})) ==
        Q(10381, 10203, 2903, 12231, 1));
  CHECK_THROWS_WITH_AS(derive_case1(Rat(1), Case1Variant::Quadratic),
                       "pole in the quadratic ansatz: (t^2 - 1)^4 = 0", DomainError);
  CHECK_THROWS_AS(derive_case1(Rat(-1), Case1Variant::Quadratic), DomainError);
  CHECK_THROWS_AS(derive_case1(Rat(0), Case1Variant::Quadratic), DomainError);
}

TEST_CASE("case 2 chain") {
  const auto d = derive_case2(Rat(1));
  CHECK(d.v == Rat(3));
  CHECK(d.rho == Rat(13, 3));
  CHECK(d.t == Rat(22, 13));
  CHECK(d.omega == Rat(267, 13));
  CHECK(d.k == Rat(7, 2));
  CHECK(d.z == Rat(9, 2));
  CHECK(d.delta == Rat(11036, 27));
  CHECK(d.delta_sign == 1);
  CHECK(pqrs_to_quadruple(state_to_pqrs({-1, d.rho, d.t, d.omega})) == Q(7, 157, -227, 239, -1));

  const auto m2 = derive_case2(Rat(-2));
  CHECK(m2.v == Rat(3, 4));
  CHECK(m2.rho == Rat(-25, 36));
  CHECK(m2.t == Rat(-2, 25));
  CHECK(m2.omega == Rat(-113, 200));

  const auto m1 = derive_case2(Rat(-1));
  CHECK(m1.rho == Rat(-1));
  CHECK(m1.t == Rat(0));
  CHECK(eq7_residual({-1, m1.rho, m1.t, m1.omega}).is_zero());
  CHECK(is_trivial(pqrs_to_quadruple(state_to_pqrs({-1, m1.rho, m1.t, m1.omega}))));
  CHECK_THROWS_AS(derive_case2(Rat(0)), DomainError);

  const auto s = derive_case2(T);
  CHECK(pqrs_equivalent(formulas::pqrs_from_state(RatFn(-1), s.rho, s.t, s.omega),
                        as_pqrs(family_spec(FamilyId::NegA16))));
}

TEST_CASE("derivation chains agree with the closed forms at random parameters") {
  std::mt19937 rng(2718);
  int linear = 0, quadratic = 0, neg = 0;
  for (const Rat& u : random_params(rng, 40)) {
    CAPTURE(u.str());
    try {
      const auto d = derive_case1(u, Case1Variant::Linear);
      CHECK(from_state(1, d.rho, u, d.omega) == generate(FamilyId::Euler1, u, Mode::Canonical));
      ++linear;
    } catch (const DomainError&) {
    }
    try {
      const auto d = derive_case1(u, Case1Variant::Quadratic);
      CHECK(from_state(1, d.rho, u, d.omega) == generate(FamilyId::Euler2, u, Mode::Canonical));
      ++quadratic;
    } catch (const DomainError&) {
    }
    try {
      const auto d = derive_case2(u);
      CHECK(from_state(-1, d.rho, d.t, d.omega) == generate(FamilyId::NegA16, u, Mode::Canonical));
      ++neg;
    } catch (const DomainError&) {
    }
  }
  CHECK(linear >= 10);
  CHECK(quadratic >= 10);
  CHECK(neg >= 10);
}

TEST_CASE("rho = 1 family") {
  auto ps = rho1_solve({Rat(-3, 2), Rat(7, 16)});
  CHECK(ps.a == Rat(625, 256));
  CHECK(canonicalize(pqrs_to_quadruple(ps)) == Q(10943964, 1733885, 10758915, 5558948, 1));
  ps = rho1_solve({Rat(-2, 9), Rat(1, 3)});
  CHECK(ps.a == Rat(1, 8));
  CHECK(canonicalize(pqrs_to_quadruple(ps)) == Q(248, 223, 44, 257, 2));
  // (2 alpha + 3) t^2 + 1 = 0
  CHECK_THROWS_AS(rho1_solve({Rat(-2), Rat(1)}), DomainError);

  const auto sym = rho1_solve_symbolic(RatFn(Rat(1, 2)), T);
  CHECK(sym.a == RatFn(Rat(1, 4)));
  CHECK(pqrs_equivalent(sym, as_pqrs(family_spec(FamilyId::T6_1))));
  for (int i = -3; i <= 3; ++i) {
    const Rat t(i, 2);
    const auto st = rho1_solve({Rat(1, 3), t});
    CHECK(eq7_residual({st.a, 1, t, st.a * t * t - Rat(1, 3)}).is_zero());
  }
}

TEST_CASE("Table 5 lines reproduce their coefficient and their Table 6 line") {
  CHECK(table5_rows().size() == 10);
  for (const auto& row : table5_rows()) {
    CAPTURE(row.index);
    CHECK(formulas::rho1_coefficient(row.alpha, row.t) == row.a);
    const auto sym = rho1_solve_symbolic(row.alpha, row.t);
    CHECK(sym.a == row.a);
    CHECK(pqrs_equivalent(sym, as_pqrs(family_spec(row.table6))));
  }
  CHECK(table5_row(10).a == RatFn(Poly{Rat(9, 4), 0, 1}));
  CHECK_THROWS_AS(table5_row(11), DomainError);
  // line 12 is registered directly
  const FamilySpec& l12 = family_spec(FamilyId::T6_12);
  CHECK(l12.a == RatFn(Poly{1, 0, 4}) / RatFn(Poly{16, 0, -8}));
}

TEST_CASE("recover_t") {
  CHECK(recover_t(Q(158, -59, 133, 134, 1)) == Rat(3));
  CHECK(recover_t(Q(10381, 10203, 2903, 12231, 1)) == Rat(3));
  CHECK(recover_t(Q(7, 157, -227, 239, -1)) == Rat(22, 13));
  CHECK_THROWS_AS(recover_t(Q(1, 0, 1, 0, 1)), DomainError);

  std::mt19937 rng(42);
  int done = 0;
  for (const Rat& t : random_params(rng, 30)) {
    try {
      CHECK(recover_t(generate(FamilyId::Euler1, t, Mode::Raw)) == t);
      CHECK(recover_t(generate(FamilyId::Euler2, t, Mode::Raw)) == t);
      const auto d = derive_case2(t);
      CHECK(recover_t(generate(FamilyId::NegA16, t, Mode::Raw)) == d.t);
      ++done;
    } catch (const DomainError&) {
    }
  }
  CHECK(done >= 10);
}

TEST_CASE("recover_n on the Table 3 rows") {
  struct Case {
    Quadruple q;
    std::vector<Rat> candidates;
    Rat n;
    Rat footnote;
  };
  const std::vector<Case> cases{
      {Q(7, 157, -227, 239, -1), {Rat(-1, 2), 1}, 1, Rat(-7, 2)},
      {Q(-257, 292, 193, -256, -1), {-2}, -2, Rat(-50, 7)},
      {Q(502, 298, -497, -271, -1), {Rat(-1, 2), 1}, Rat(-1, 2), Rat(11, 32)},
      {Q(-6842, 9018, -4903, -8409, -1), {-3, Rat(-3, 2)}, Rat(-3, 2), Rat(-213, 128)},
      {Q(6742, 5098, -9043, 8531, -1), {Rat(-1, 3), Rat(1, 2)}, Rat(1, 2), Rat(-45, 64)},
      {Q(-10757, 18292, -45883, 46136, -1), {Rat(-2, 3), 2}, 2, Rat(-342, 11)},
      {Q(-28997, 33237, 59777, -60369, -1), {-3, Rat(-3, 2)}, -3, Rat(-381, 8)},
      {Q(89841, 27879, -90829, -43307, -1), {Rat(-1, 3), Rat(1, 2)}, Rat(-1, 3), Rat(95, 324)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.q.str());
    const NRecovery r = recover_n(c.q);
    CHECK(r.candidates == c.candidates);
    CHECK(r.values == std::vector<Rat>{c.n});
    REQUIRE(r.footnote.has_value());
    CHECK(*r.footnote == c.footnote);
  }
  const NRecovery one = recover_n(Q(7, 157, -227, 239, -1));
  CHECK(one.x == Rat(41, 117));
  CHECK(one.y == Rat(-5, 9));
  CHECK(one.rho == Rat(13, 3));
  CHECK(one.v == Rat(3));
  CHECK_THROWS_AS(recover_n(Q(4, 1, 2, 3, 3)), PreconditionError);
  CHECK(recover_n(Q(4, 1, 2, 3, -1)).values.empty());
}

TEST_CASE("sum form of the a = -1 family meets the degree 13 and 15 families") {
  const auto s1 = canonicalize(sum_form(generate(FamilyId::NegA16, 1, Mode::Raw)));
  CHECK(s1 == generate(FamilyId::Deg15, -2, Mode::Canonical));
  const auto s2 = canonicalize(sum_form(generate(FamilyId::NegA16, -2, Mode::Raw)));
  CHECK(s2 == generate(FamilyId::Deg13, 1, Mode::Canonical));
}

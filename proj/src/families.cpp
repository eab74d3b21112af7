#include "quartet/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quartet {

namespace {

// Polynomial from ascending integer coefficients.
Poly P(std::initializer_list<long> ascending) {
  std::vector<Rat> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return Poly(std::move(c));
}

const Poly X = Poly::x();

RatFn F(const Poly& p) { return RatFn(p); }

struct TagEntry {
  FamilyId id;
  std::string_view tag;
};

constexpr std::array<TagEntry, 18> kTags{{
    {FamilyId::Euler1, "euler1"}, {FamilyId::Euler2, "euler2"}, {FamilyId::NegA16, "nega16"},
    {FamilyId::Deg13, "deg13"},   {FamilyId::Deg15, "deg15"},   {FamilyId::Hayashi, "hayashi"},
    {FamilyId::Rho1, "rho1"},     {FamilyId::T6_1, "t6_1"},     {FamilyId::T6_2, "t6_2"},
    {FamilyId::T6_3, "t6_3"},     {FamilyId::T6_4, "t6_4"},     {FamilyId::T6_5, "t6_5"},
    {FamilyId::T6_6, "t6_6"},     {FamilyId::T6_7, "t6_7"},     {FamilyId::T6_8, "t6_8"},
    {FamilyId::T6_9, "t6_9"},     {FamilyId::T6_10, "t6_10"},   {FamilyId::T6_12, "t6_12"},
}};

FamilySpec make_spec(FamilyId id, std::string description, std::string param, RatFn p, RatFn q,
                     RatFn r, RatFn s, RatFn a) {
  return {id, std::move(description), std::move(param), std::move(p), std::move(q),
          std::move(r), std::move(s), std::move(a)};
}

std::vector<FamilySpec> build_registry() {
  std::vector<FamilySpec> out;
  const Poly t2p1 = P({1, 0, 1});    // x^2 + 1
  const Poly t2m1 = P({-1, 0, 1});   // x^2 - 1

  {
    const Poly q = t2p1 * P({-1, 0, 18, 0, -1});
    out.push_back(make_spec(FamilyId::Euler1, "Euler's first solution, a = 1", "t",
                            F(P({2}) * X * P({4, 0, 1, 0, 10, 0, 1})), F(q), F(X * q),
                            F(P({2}) * P({1, 0, 10, 0, 1, 0, 4})), RatFn(1)));
  }
  {
    // The t^10 coefficient is 214; this is what the quadratic ansatz yields.
    const Poly q = P({-1, 0, 214, 0, 2481, 0, 2804, 0, 2481, 0, 214, 0, -1});
    out.push_back(make_spec(FamilyId::Euler2, "Euler's second solution, a = 1", "t",
                            F(P({3}) * X * t2m1.pow(2) * P({9, 0, -44, 0, 190, 0, 100, 0, 1})),
                            F(q), F(X * q),
                            F(P({3}) * t2m1.pow(2) * P({1, 0, 100, 0, 190, 0, -44, 0, 9})),
                            RatFn(1)));
  }
  {
    const Poly n4 = P({1, 3, 3, 3, 1});
    const Poly n2n1 = P({1, 1, 1});
    const Poly n3n2 = P({1, 0, 1, 1});
    out.push_back(make_spec(
        FamilyId::NegA16, "a = -1 family in n", "n",
        F(P({-1}) * X.pow(4) * P({1, 1}) * P({2, 2, 1}) * n4),
        F(n2n1 * n3n2 * P({1, 2, 3, 2, 2, 2, 1})), F(X * P({1, 1}) * n2n1 * n3n2 * n4),
        F(X * P({1, 2, 3, 2, 1, 2, 7, 10, 8, 4, 1})), RatFn(-1)));
  }
  {
    const Poly n2n1 = P({1, 1, 1});
    const Poly n3n2 = P({1, 0, 1, 1});
    const Poly n3n = P({-1, 1, 0, 1});
    const Poly n4 = P({1, 1, 2, 2, 1});
    out.push_back(make_spec(
        FamilyId::Deg13, "degree-13 family, A^4 + B^4 = C^4 + D^4", "n",
        F(n3n2 * n2n1 * P({1, 2, 6, 10, 14, 14, 9, 4, 1})),
        F(X.pow(4) * P({2, 2, 1}) * n3n * n4),
        F(X * P({1, 4, 12, 26, 46, 68, 82, 80, 64, 40, 19, 6, 1})),
        F(X * n3n2 * n3n * n2n1 * n4), RatFn(1)));
  }
  {
    const Poly n1 = P({1, 1});
    const Poly n4a = P({1, 3, 3, 3, 1});
    const Poly n4b = P({-1, -1, 0, 2, 1});
    const Poly n5 = P({1, 1, 5, 8, 5, 1});
    out.push_back(make_spec(
        FamilyId::Deg15, "degree-15 family, A^4 + B^4 = C^4 + D^4", "n",
        F(n1 * P({1, 4, 12, 30, 71, 146, 254, 358, 391, 320, 195, 90, 32, 8, 1})),
        F(X * n1 * n4a * n4b * n5), F(X * n1.pow(4) * n4a * P({1, 2, 3, 6, 9, 4, 1})),
        F(n4b * n5 * P({1, 2, 3, 2, 2, 2, 1})), RatFn(1)));
  }
  out.push_back(make_spec(FamilyId::Hayashi, "Hayashi, a = u^2 - 3", "u", F(X * P({-3, 0, 1})),
                          F(P({-2, 0, 2})), F(X * P({-1, 0, 1})), RatFn(2), F(P({-3, 0, 1}))));

  const RatFn u = RatFn::x();
  const auto row = [&](FamilyId id, int i, RatFn p, RatFn q, RatFn r, RatFn s, RatFn a) {
    out.push_back(make_spec(id, "rho = 1 family, row " + std::to_string(i), "u", std::move(p),
                            std::move(q), std::move(r), std::move(s), std::move(a)));
  };
  row(FamilyId::T6_1, 1, F(X * P({4, 0, 1})), F(P({-2, 0, 1})), F(X * P({-2, 0, 1})),
      F(P({4, 0, 4})), RatFn(Rat(1, 4)));
  row(FamilyId::T6_2, 2, F(X * P({16, 0, 1})), F(P({-20, 0, 1})), F(X * P({-20, 0, 1})),
      F(P({0, 0, 9})), RatFn(P({4, 0, 1}).pow(2), P({0, 0, 0, 0, 9})));
  row(FamilyId::T6_3, 3, F(P({1, 0, 1})), u, RatFn(1), F(X * P({2, 0, 1})),
      RatFn(P({1}), P({2, 0, 1})));
  row(FamilyId::T6_4, 4, F(X * P({1, 0, 9})), F(P({-4, 0, 9})), F(X * P({-4, 0, 9})),
      F(P({1, 0, -6})), RatFn(P({16, 0, 9}), P({1, 0, -6})));
  row(FamilyId::T6_5, 5, F(X * P({1, 0, 1})), F(P({6, 0, 3})), F(P({0, 3})),
      F(P({0, 0, 1}) * P({4, 0, 1})), RatFn(P({2, 0, 1}), P({0, 0, 0, 0, 1})));
  row(FamilyId::T6_6, 6, F(X * P({16, 0, -7, 0, 4})), F(P({4, 0, -19, 0, 4})),
      F(X * P({4, 0, -19, 0, 4})), F(P({8}) * P({1, 0, 1}) * P({2, 0, -1})),
      RatFn(P({1, 0, 4}), P({8}) * P({2, 0, -1})));
  row(FamilyId::T6_7, 7, F(P({1, 0, -1, 0, 1})), F(X * P({-1, 0, 2})), F(P({-1, 0, 2})),
      F(X * P({-1, 0, 0, 0, 1})), RatFn(P({1}), P({-1, 0, 1})));
  row(FamilyId::T6_8, 8, F(P({2, 0, 3}) * P({1, 0, 9})), F(P({0, 2}) * P({-1, 0, 1}).pow(2)),
      F(P({2, 0, 3}) * P({1, 0, -1})), F(P({0, 10}) * P({1, 0, 4})),
      RatFn(P({1, 0, 0, 0, -1}), P({5})));
  row(FamilyId::T6_9, 9, F(P({-5, 0, 3}) * P({25, 0, -9, 0, -1, 0, 1})),
      F(X * P({-7, 0, 1}) * P({-25, 0, 3, 0, -3, 0, 1})),
      F(P({-5, 0, 3}) * P({-25, 0, 3, 0, -3, 0, 1})),
      F(X * P({-3, 0, 1}) * P({1, 0, 1}) * P({25, 0, -6, 0, 1})),
      RatFn(P({-7, 0, 1}), P({-3, 0, 1})));
  // The printed p and r cells read "r(4u^4 + ...)"; the prefactor is u.
  row(FamilyId::T6_10, 10, F(X * P({4, 0, 9, 0, 4})), F(P({6, 0, 9, 0, 4})),
      F(X * P({6, 0, 9, 0, 4})), F(P({4, 0, 4})), RatFn(P({9, 0, 4}), P({4})));
  row(FamilyId::T6_12, 12, F(P({2, 0, 2})), F(P({0, 3})), F(P({0, 6})), F(P({4, 0, -2})),
      RatFn(P({1, 0, 4}), P({8}) * P({2, 0, -1})));

  for (const auto& spec : out) {
    if (!is_identically_zero(identity_residual(spec))) {
      throw std::logic_error("registered family " + std::string(family_tag(spec.id)) +
                             " does not satisfy the pqrs identity");
    }
  }
  return out;
}

const std::vector<FamilySpec>& registry() {
  static const std::vector<FamilySpec> specs = build_registry();
  return specs;
}

Rat eval_component(const RatFn& f, const Rat& at, const FamilySpec& spec, std::string_view what) {
  try {
    return f.eval(at, spec.param);
  } catch (const DomainError& e) {
    throw DomainError(std::string(family_tag(spec.id)) + " " + std::string(what) + ": " + e.what());
  }
}

std::vector<Table5Row> build_table5() {
  const RatFn u = RatFn::x();
  const RatFn u2 = u * u;
  const auto r = [](long n, long d) { return RatFn(Rat(n, d)); };
  std::vector<Table5Row> rows;
  rows.push_back({1, r(1, 2), u, r(1, 4), FamilyId::T6_1});
  rows.push_back({2, (RatFn(3) * u2 + RatFn(4)) / u2, u,
                  (u2 + RatFn(4)).pow(2) / (RatFn(9) * u2 * u2), FamilyId::T6_2});
  rows.push_back({3, RatFn(1) / u2, RatFn(1) / u, RatFn(1) / (u2 + RatFn(2)), FamilyId::T6_3});
  rows.push_back({4, -(RatFn(3) * u2 + RatFn(4)), u,
                  (RatFn(9) * u2 + RatFn(16)) / (RatFn(1) - RatFn(6) * u2), FamilyId::T6_4});
  rows.push_back({5, (RatFn(3) * u2 + RatFn(4)) / (u2 * (u2 + RatFn(2))), u / (u2 + RatFn(2)),
                  (u2 + RatFn(2)) / (u2 * u2), FamilyId::T6_5});
  rows.push_back({6, (RatFn(1) - RatFn(4) * u2) / RatFn(4), u,
                  (RatFn(4) * u2 + RatFn(1)) / (RatFn(8) * (RatFn(2) - u2)), FamilyId::T6_6});
  rows.push_back({7, RatFn(-2) / u2, RatFn(1) / u, RatFn(1) / (u2 - RatFn(1)), FamilyId::T6_7});
  rows.push_back({8, (u2 * u2 + RatFn(2) * u2 + RatFn(2)) / (RatFn(2) * (RatFn(1) - u2)),
                  (RatFn(3) * u2 + RatFn(2)) / (RatFn(2) * u * (u2 - RatFn(1))),
                  (RatFn(1) - u2 * u2) / RatFn(5), FamilyId::T6_8});
  rows.push_back({9, (u2 + RatFn(9)) / (u2 - RatFn(7)),
                  (RatFn(3) * u2 - RatFn(5)) / (u * (u2 - RatFn(7))),
                  (u2 - RatFn(7)) / (u2 - RatFn(3)), FamilyId::T6_9});
  rows.push_back({10, r(-3, 2), u, u2 + r(9, 4), FamilyId::T6_10});
  return rows;
}

}  // namespace

std::string_view family_tag(FamilyId id) {
  for (const auto& e : kTags) {
    if (e.id == id) return e.tag;
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view tag) {
  std::string lower(tag);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& e : kTags) {
    if (e.tag == lower) return e.id;
  }
  return std::nullopt;
}

const std::vector<FamilyId>& registered_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& s : registry()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

const FamilySpec& family_spec(FamilyId id) {
  if (id == FamilyId::Rho1) {
    throw DomainError("rho1 has two parameters (alpha, t); use rho1_solve");
  }
  for (const auto& s : registry()) {
    if (s.id == id) return s;
  }
  throw DomainError("unknown family id");
}

RatFn identity_residual(const FamilySpec& spec) {
  const auto& [id, description, param, p, q, r, s, a] = spec;
  return p * q * (p * p + q * q) * RatFn(a.den()) - RatFn(a.num()) * r * s * (r * r + s * s);
}

RatFn identity_residual(FamilyId id) { return identity_residual(family_spec(id)); }

bool identity_holds_numerically(const FamilySpec& spec, std::size_t points) {
  const auto height = [](const RatFn& f) {
    return static_cast<std::size_t>(std::max(f.num().degree(), 0) + std::max(f.den().degree(), 0));
  };
  // Degree bound for the numerator of the residual as a rational function.
  const std::size_t bound =
      4 * (height(spec.p) + height(spec.q) + height(spec.r) + height(spec.s)) + height(spec.a) + 1;
  const std::size_t needed = std::max(points, bound);
  std::size_t checked = 0;
  for (const auto& x : sample_points(2 * needed)) {
    if (checked == needed) break;
    PqrsTuple v;
    try {
      v = eval_spec(spec, x);
    } catch (const DomainError&) {
      continue;
    }
    if (!verify_pqrs(v).is_zero()) return false;
    ++checked;
  }
  return checked == needed;
}

PqrsTuple eval_spec(const FamilySpec& spec, const Rat& param) {
  // Named locals, not a braced init: g++ < 13 skips destroying the members
  // already built when a later one throws (a pole).
  Rat p = eval_component(spec.p, param, spec, "p");
  Rat q = eval_component(spec.q, param, spec, "q");
  Rat r = eval_component(spec.r, param, spec, "r");
  Rat s = eval_component(spec.s, param, spec, "s");
  Rat a = eval_component(spec.a, param, spec, "a");
  return {std::move(p), std::move(q), std::move(r), std::move(s), std::move(a)};
}

PqrsTuple eval_family(FamilyId id, const Rat& param) { return eval_spec(family_spec(id), param); }

Quadruple generate(FamilyId id, const Rat& param, Mode mode) {
  return pqrs_to_quadruple(eval_family(id, param), mode);
}

PqrsTuple rho1_solve(const Rho1Params& params) {
  const Rat& alpha = params.alpha;
  const Rat& t = params.t;
  const Rat den = (Rat(2) * alpha + Rat(3)) * t * t + Rat(1);
  if (den.is_zero()) {
    throw DomainError("rho1_solve: (2 alpha + 3) t^2 + 1 vanishes at alpha = " + alpha.str() +
                      ", t = " + t.str());
  }
  auto f = formulas::rho1_pqrs(alpha, t);
  return {f.p, f.q, f.r, f.s, f.a};
}

formulas::Pqrs<RatFn> rho1_solve_symbolic(const RatFn& alpha, const RatFn& t) {
  return formulas::rho1_pqrs(alpha, t);
}

const std::vector<Table5Row>& table5_rows() {
  static const std::vector<Table5Row> rows = build_table5();
  return rows;
}

const Table5Row& table5_row(int index) {
  for (const auto& r : table5_rows()) {
    if (r.index == index) return r;
  }
  throw DomainError("no (alpha, t) row " + std::to_string(index));
}

Rat recover_t(const Quadruple& q) {
  if (q.A == q.C) throw DomainError("recover_t: A == C");
  return Rat(Int(q.B + q.D), Int(q.A - q.C));
}

NRecovery recover_n(const Quadruple& q) {
  if (q.a != Rat(-1)) throw PreconditionError("recover_n requires a = -1, got a = " + q.a.str());
  if (q.A == q.C) throw DomainError("recover_n: A == C");
  if (q.D == -q.B) throw DomainError("recover_n: D == -B");
  NRecovery out;
  out.x = Rat(Int(q.D - q.B), Int(q.A - q.C));
  out.y = Rat(Int(q.A + q.C), Int(q.D + q.B));
  const Rat den = out.y * out.y - out.x * out.x;
  if (den.is_zero()) throw DomainError("recover_n: y^2 - x^2 vanishes");
  out.rho = (out.x * out.y + Rat(1)) / den;
  out.t = recover_t(q);
  out.v = out.rho * out.t - out.rho;

  // v = (n^2 + n + 1)/n^2  <=>  (v - 1) n^2 - n - 1 = 0.
  const Rat lead = out.v - Rat(1);
  if (lead.is_zero()) {
    out.candidates.push_back(Rat(-1));
  } else if (auto root = rat_sqrt(Rat(4) * out.v - Rat(3))) {
    for (const Rat& r : {(Rat(1) - *root) / (Rat(2) * lead), (Rat(1) + *root) / (Rat(2) * lead)}) {
      if (std::find(out.candidates.begin(), out.candidates.end(), r) == out.candidates.end()) {
        out.candidates.push_back(r);
      }
    }
    std::sort(out.candidates.begin(), out.candidates.end());
  }

  const Quadruple target = canonicalize(q);
  for (const auto& n : out.candidates) {
    try {
      if (generate(FamilyId::NegA16, n, Mode::Canonical) == target) out.values.push_back(n);
    } catch (const DomainError&) {
    }
  }

  const Rat foot_den = out.x - (out.y * out.y + out.y + Rat(1));
  if (!foot_den.is_zero()) out.footnote = (out.y - out.x) * (out.y - Rat(1)) / foot_den;
  return out;
}

}  // namespace quartet

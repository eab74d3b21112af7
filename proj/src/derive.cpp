#include "quartet/derive.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "quartet/formulas.hpp"

namespace quartet {

namespace {

std::string show(const Rat& v) { return v.str(); }
std::string show(const RatFn& v) { return v.str("t"); }

// Polynomial in z with coefficients in F, ascending.
template <class F>
using ZPoly = std::vector<F>;

template <class F>
ZPoly<F> zmul(const ZPoly<F>& a, const ZPoly<F>& b) {
  ZPoly<F> out(a.size() + b.size() - 1, F(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class F>
ZPoly<F> zadd(ZPoly<F> a, const ZPoly<F>& b, const F& scale) {
  if (b.size() > a.size()) a.resize(b.size(), F(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  return a;
}

template <class F>
F coeff(const ZPoly<F>& p, std::size_t k) {
  return k < p.size() ? p[k] : F(0);
}

template <class F>
void require_zero(const F& v, const std::string& what) {
  if (!v.is_zero()) throw std::logic_error("derivation check failed: " + what + " = " + show(v));
}

template <class F>
void require_nonzero(const F& v, const std::string& what) {
  if (v.is_zero()) throw DomainError(what + " = 0");
}

}  // namespace

template <class F>
Case1Derivation<F> derive_case1(const F& t, Case1Variant variant) {
  const F one(1);
  const F t2 = t * t;
  const bool quadratic = variant == Case1Variant::Quadratic;
  if (quadratic) {
    require_nonzero(t2 - one, "pole in the quadratic ansatz: (t^2 - 1)^4");
    require_nonzero(t, "quadratic ansatz at t = 0: p = r = 0");
  }

  // Resolvent at a = 1, rho = 1 + z, as a cubic in z.
  const ZPoly<F> rho{one, one};
  const ZPoly<F> rho2 = zmul(rho, rho);
  const ZPoly<F> rho3 = zmul(rho2, rho);
  ZPoly<F> lhs = zadd(zadd(ZPoly<F>{}, rho3, t2 * t2), rho2, F(3) * t2);
  lhs = zadd(lhs, rho3, one);
  lhs[0] -= t2;

  const F t2p1 = t2 + one;
  ZPoly<F> omega{t2p1, F(Rat(3, 2)) * t2p1};
  if (quadratic) omega.push_back(F(3) * (t2 - one) * (t2 - one) / (F(8) * t2p1));

  const ZPoly<F> diff = zadd(lhs, zmul(omega, omega), F(-1));
  // Linear ansatz cancels z^0, z^1; quadratic also z^2. The remainder is
  // z^m (c_m + c_{m+1} z) with m = 2 or 3.
  const std::size_t m = quadratic ? 3 : 2;
  for (std::size_t k = 0; k < m; ++k) {
    require_zero(coeff(diff, k), "ansatz z^" + std::to_string(k) + " coefficient");
  }
  for (std::size_t k = m + 2; k < diff.size(); ++k) {
    require_zero(coeff(diff, k), "ansatz z^" + std::to_string(k) + " coefficient");
  }
  const F lead = coeff(diff, m + 1);
  require_nonzero(lead, "leading coefficient after cancellation");

  Case1Derivation<F> out{t, variant, -coeff(diff, m) / lead, F(0), F(0)};
  out.rho = one + out.z;
  F w(0);
  for (auto it = omega.rbegin(); it != omega.rend(); ++it) w = w * out.z + *it;
  out.omega = w;
  require_zero(formulas::resolvent_residual(one, out.rho, t, out.omega), "resolvent residual");
  return out;
}

template <class F>
Case2Derivation<F> derive_case2(const F& n) {
  const F one(1);
  require_nonzero(n, "n");
  const F n2 = n * n;

  // With t = (rho + v)/rho, the t^2 expression becomes a cubic in rho whose
  // rho^3 terms always cancel; the rho^2 terms cancel when 2 v n^2 - 1 equals
  // 2n^2 + 2n + 1, leaving a linear equation for rho.
  const F v = (F(2) * n2 + F(2) * n + F(2)) / (F(2) * n2);
  const F rho_coeff = n2 * v * v - F(2) * v - (n2 - one);
  require_nonzero(rho_coeff, "n^2 v^2 - 2v - (n^2 - 1), i.e. 2n^3 + 2n^2 - 1");
  const F rho = (v * v + (n + one) * (n + one)) / rho_coeff;
  require_nonzero(rho, "rho");
  const F t = (rho + v) / rho;

  const F kden = rho * n2 - one;
  require_nonzero(kden, "rho n^2 - 1");
  const F k = ((F(2) * rho + one) * n + F(2)) / kden;
  const F z = one + k;
  const F rho2p1 = rho * rho + one;
  const F omega = rho2p1 * z / rho;
  const F delta =
      rho2p1 * ((F(2) * rho + one) * rho * n2 + F(4) * rho * n + (F(2) * rho + one)) / kden;

  const F rho3 = rho * rho * rho;
  require_zero(delta * delta - (rho2p1 * rho2p1 * (F(4) * rho * rho + one) + F(4) * rho3 * omega * omega),
               "Delta^2 relation");
  require_zero(delta * delta / (rho2p1 * rho2p1) - (F(4) * rho * rho + F(4) * rho * z * z + one),
               "Delta/(rho^2 + 1) relation");
  require_zero(delta / rho2p1 - (F(2) * n * rho * k - (F(2) * rho + one)), "rational k choice");
  const F t2 = t * t;
  const F t2_closed = (n2 * rho3 + (F(2) * n2 + F(2) * n + one) * rho * rho + (n2 - one) * rho +
                       (n + one) * (n + one)) /
                      (rho * rho * (n2 * rho - one));
  require_zero(t2 - t2_closed, "t^2 closed form");

  int sign = 0;
  if ((t2 - (F(3) * rho * rho + one + delta) / (F(2) * rho3)).is_zero()) {
    sign = 1;
  } else if ((t2 - (F(3) * rho * rho + one - delta) / (F(2) * rho3)).is_zero()) {
    sign = -1;
  }
  if (sign == 0) throw std::logic_error("derivation check failed: no Delta branch gives t^2");
  require_zero(formulas::resolvent_residual(F(-1), rho, t, omega), "resolvent residual");
  return {n, v, k, z, rho, t, omega, delta, sign};
}

template Case1Derivation<Rat> derive_case1<Rat>(const Rat&, Case1Variant);
template Case1Derivation<RatFn> derive_case1<RatFn>(const RatFn&, Case1Variant);
template Case2Derivation<Rat> derive_case2<Rat>(const Rat&);
template Case2Derivation<RatFn> derive_case2<RatFn>(const RatFn&);

}  // namespace quartet

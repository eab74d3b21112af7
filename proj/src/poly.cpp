#include "quartet/poly.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace quartet {

Poly::Poly(const Rat& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rat Poly::eval(const Rat& at) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::scaled(const Rat& c) const {
  Poly out = *this;
  for (auto& k : out.coeffs_) k *= c;
  out.trim();
  return out;
}

Poly Poly::monic() const { return is_zero() ? *this : scaled(leading().inverse()); }

Poly::DivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Poly rem = *this;
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {Poly(), rem};
  std::vector<Rat> quot(static_cast<std::size_t>(rem.degree() - dd + 1));
  const Rat lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Rat factor = rem.leading() * lead_inv;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int k = 0; k <= dd; ++k) {
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(k)];
    }
    rem.trim();
  }
  return {Poly(std::move(quot)), rem};
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rat mag = c.abs();
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rat(1)) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RatFn::RatFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

void RatFn::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).quotient;
      den_ = den_.divmod(g).quotient;
    }
  }
  const Rat lead = den_.leading();
  if (lead != Rat(1)) {
    const Rat inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFn RatFn::operator-() const {
  RatFn out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
  if (o.is_zero()) throw DomainError("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

RatFn RatFn::pow(int exponent) const {
  if (exponent < 0) return RatFn(1) / pow(-exponent);
  return RatFn(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)));
}

Rat RatFn::eval(const Rat& at, std::string_view var) const {
  const Rat d = den_.eval(at);
  if (d.is_zero()) {
    throw DomainError("pole at " + std::string(var) + " = " + at.str() + ": denominator " +
                      den_.str(var) + " vanishes");
  }
  return num_.eval(at) / d;
}

std::string RatFn::str(std::string_view var) const {
  if (den_ == Poly(1)) return num_.str(var);
  auto wrap = [&](const Poly& p) {
    const auto s = p.str(var);
    return p.is_constant() || (p.coeffs().size() == 2 && p.coeff(0).is_zero()) ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RatFn ratfn_reduce(const Poly& num, const Poly& den) { return RatFn(num, den); }

bool is_identically_zero(const RatFn& f) { return f.num().is_zero(); }

std::vector<Rat> sample_points(std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  out.emplace_back(0);
  for (long h = 1; out.size() < count; ++h) {
    // All p/q with max(|p|, q) = h, in a fixed order.
    for (long q = 1; q <= h && out.size() < count; ++q) {
      for (long p = (q == h ? 1 : h); p <= h && out.size() < count; ++p) {
        if (std::gcd(p, q) != 1) continue;
        out.emplace_back(p, q);
        if (out.size() < count) out.emplace_back(-p, q);
      }
    }
  }
  return out;
}

bool vanishes_at_sample_points(const RatFn& f) {
  const auto needed = static_cast<std::size_t>(std::max(f.num().degree(), 0) +
                                               std::max(f.den().degree(), 0) + 1);
  std::size_t checked = 0;
  // Extra candidates leave room for skipping poles.
  const auto candidates = sample_points(needed + static_cast<std::size_t>(f.den().degree()) + 1);
  for (const auto& x : candidates) {
    if (checked == needed) break;
    if (f.den().eval(x).is_zero()) continue;
    if (!f.num().eval(x).is_zero()) return false;
    ++checked;
  }
  return checked == needed;
}

}  // namespace quartet

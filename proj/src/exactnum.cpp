#include "quartet/exactnum.hpp"

#include <algorithm>
#include <cctype>

namespace quartet {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Int parse_int(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Int(std::string(text), 10);
}

std::string to_string(const Int& v) { return v.get_str(10); }

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("zero denominator");
  v_.get_num() = num;
  v_.get_den() = den;
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw DomainError("sign belongs on the numerator: '" + std::string(text) + "'");
  }
  return Rat(parse_int(text.substr(0, slash)), parse_int(den_text));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

std::string Rat::str() const {
  if (is_integer()) return to_string(num());
  return to_string(num()) + "/" + to_string(den());
}

std::string to_string(const Rat& v) { return v.str(); }

std::optional<Int> isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt of negative integer " + to_string(n));
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q.sign() < 0) return std::nullopt;
  auto n = isqrt(q.num());
  if (!n) return std::nullopt;
  auto d = isqrt(q.den());
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

FourthPowerSplit fourth_power_free(const Int& m) {
  if (m == 0) throw DomainError("fourth_power_free of zero");
  Int rest = abs(m);
  Int core = 1;
  Int root = 1;
  auto absorb = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 4; ++i) root *= p;
    for (unsigned i = 0; i < e % 4; ++i) core *= p;
  };
  // A prime whose fourth power exceeds the remaining cofactor cannot divide
  // it four times, so trial division stops at the fourth root.
  absorb(2);
  unsigned long p = 3;
  for (; p <= kTrialDivisionLimit && Int(p) * p * p * p <= rest; p += 2) absorb(p);
  if (p > kTrialDivisionLimit && rest > 1) {
    // Every prime factor left exceeds L. A perfect fourth power is absorbed;
    // otherwise a cofactor below L^5 cannot hold p^4 times anything > 1.
    Int r4;
    if (mpz_root(r4.get_mpz_t(), rest.get_mpz_t(), 4) != 0) {
      root *= r4;
      rest = 1;
    } else {
      Int l5;
      mpz_ui_pow_ui(l5.get_mpz_t(), kTrialDivisionLimit, 5);
      if (rest >= l5) {
        throw DomainError("fourth_power_free: cofactor " + to_string(rest) +
                          " has no prime factor below the trial-division limit and is too large to "
                          "certify");
      }
    }
  }
  core *= rest;
  if (m < 0) core = -core;
  return {core, root};
}

RatFourthPowerSplit fourth_power_free_rat(const Rat& q) {
  if (q.is_zero()) throw DomainError("fourth_power_free_rat of zero");
  const Int den = q.den();
  auto [core, root] = fourth_power_free(q.num() * den * den * den);
  return {Rat(core), Rat(root, den)};
}

PrimitiveVector primitive_normalize(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw DomainError("primitive_normalize of an all-zero vector");
  PrimitiveVector out{{}, g};
  out.values.reserve(v.size());
  for (const auto& x : v) out.values.push_back(x / g);
  return out;
}

std::vector<Int> clear_and_normalize(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& x : v) {
    Int d = x.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Int> ints;
  ints.reserve(v.size());
  for (const auto& x : v) ints.push_back(x.num() * (l / x.den()));
  return primitive_normalize(ints).values;
}

}  // namespace quartet

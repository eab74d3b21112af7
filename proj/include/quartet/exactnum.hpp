#pragma once

// Exact integer and rational arithmetic on top of GMP, plus the small
// number-theoretic helpers the rest of the library leans on.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quartet {

using Int = mpz_class;

/// Raised when an argument lies outside an operation's domain (zero
/// denominators, poles, negative square-root arguments, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a documented precondition on a value does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Int parse_int(std::string_view text);
std::string to_string(const Int& v);

/// Reduced fraction with positive denominator. Every constructor and
/// arithmetic result is canonical, so == is structural.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(static_cast<long>(v)) {}
  Rat(long v) : v_(v) {}
  Rat(const Int& v) : v_(v) {}
  Rat(const Int& num, const Int& den);
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  /// Accepts "p" or "p/q" (optional leading sign, no whitespace).
  static Rat parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  // Copy inside rather than take l by value: g++ 11 leaks a by-value
  // argument when the compound operator throws.
  friend Rat operator+(const Rat& l, const Rat& r) { Rat out(l); out += r; return out; }
  friend Rat operator-(const Rat& l, const Rat& r) { Rat out(l); out -= r; return out; }
  friend Rat operator*(const Rat& l, const Rat& r) { Rat out(l); out *= r; return out; }
  friend Rat operator/(const Rat& l, const Rat& r) { Rat out(l); out /= r; return out; }

  friend bool operator==(const Rat& l, const Rat& r) { return l.v_ == r.v_; }
  friend std::strong_ordering operator<=>(const Rat& l, const Rat& r) {
    int c = cmp(l.v_, r.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inverse() const;
  /// Integer power; negative exponents invert (zero base then throws).
  Rat pow(int exponent) const;

  /// "num/den", or just "num" when den == 1.
  std::string str() const;

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::string to_string(const Rat& v);

/// Exact square root of a non-negative integer, or nullopt when n is not a
/// perfect square. Negative input throws DomainError.
std::optional<Int> isqrt(const Int& n);

/// Non-negative rational square root, or nullopt (always nullopt for q < 0).
std::optional<Rat> rat_sqrt(const Rat& q);

/// Trial division runs up to this prime bound. A cofactor with no smaller
/// prime factor is settled only if it is a perfect fourth power or below
/// kTrialDivisionLimit^5; anything else throws DomainError.
inline constexpr unsigned long kTrialDivisionLimit = 1UL << 20;

/// m = core * root^4 with core fourth-power-free (sign of m kept on core).
struct FourthPowerSplit {
  Int core;
  Int root;
};
FourthPowerSplit fourth_power_free(const Int& m);

/// q = core * scale^4 with an integral, fourth-power-free core and scale > 0.
/// The core is fpf(num * den^3), so e.g. 1/8 splits as 2 * (1/2)^4.
struct RatFourthPowerSplit {
  Rat core;
  Rat scale;
};
RatFourthPowerSplit fourth_power_free_rat(const Rat& q);

/// Divides by the gcd of absolute values; signs are preserved.
struct PrimitiveVector {
  std::vector<Int> values;
  Int gcd;
};
PrimitiveVector primitive_normalize(const std::vector<Int>& v);

/// Clears denominators by their lcm, then applies primitive_normalize.
std::vector<Int> clear_and_normalize(const std::vector<Rat>& v);

}  // namespace quartet

#pragma once

// Univariate polynomials and rational functions with exact rational
// coefficients. Every parametric family is checked with these.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "quartet/exactnum.hpp"

namespace quartet {

class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const Rat& c);
  Poly(int c) : Poly(Rat(c)) {}
  /// Coefficients in ascending order of degree; trailing zeros are stripped.
  explicit Poly(std::vector<Rat> ascending);
  Poly(std::initializer_list<Rat> ascending) : Poly(std::vector<Rat>(ascending)) {}

  /// The monomial x.
  static Poly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero outside the stored range).
  Rat coeff(int k) const;
  Rat leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(const Poly& l, const Poly& r) { Poly out(l); out += r; return out; }
  friend Poly operator-(const Poly& l, const Poly& r) { Poly out(l); out -= r; return out; }
  friend Poly operator*(const Poly& l, const Poly& r) { Poly out(l); out *= r; return out; }
  friend bool operator==(const Poly& l, const Poly& r) = default;

  Poly pow(unsigned exponent) const;
  Rat eval(const Rat& at) const;
  Poly scaled(const Rat& c) const;
  Poly monic() const;

  struct DivMod;
  DivMod divmod(const Poly& divisor) const;

  /// Descending powers, e.g. "-t^12 + 214t^10 - 1".
  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct Poly::DivMod {
  Poly quotient;
  Poly remainder;
};

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);

/// num/den in lowest terms with a monic denominator.
class RatFn {
 public:
  RatFn() : den_(1) {}
  RatFn(const Rat& c) : num_(c), den_(1) {}
  RatFn(int c) : RatFn(Rat(c)) {}
  RatFn(const Poly& p) : num_(p), den_(1) {}
  /// Throws DomainError when den is the zero polynomial.
  RatFn(const Poly& num, const Poly& den);

  static RatFn x() { return RatFn(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFn operator-() const;
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);
  friend RatFn operator+(const RatFn& l, const RatFn& r) { RatFn out(l); out += r; return out; }
  friend RatFn operator-(const RatFn& l, const RatFn& r) { RatFn out(l); out -= r; return out; }
  friend RatFn operator*(const RatFn& l, const RatFn& r) { RatFn out(l); out *= r; return out; }
  friend RatFn operator/(const RatFn& l, const RatFn& r) { RatFn out(l); out /= r; return out; }
  friend bool operator==(const RatFn& l, const RatFn& r) = default;

  RatFn pow(int exponent) const;

  /// Throws DomainError naming the denominator when `at` is a pole.
  Rat eval(const Rat& at, std::string_view var = "t") const;

  std::string str(std::string_view var = "t") const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

RatFn ratfn_reduce(const Poly& num, const Poly& den);

/// Structural zero test: the reduced numerator is the zero polynomial.
bool is_identically_zero(const RatFn& f);

/// Independent zero test: f vanishes at deg(num) + deg(den) + 1 distinct
/// rational points that avoid its poles.
bool vanishes_at_sample_points(const RatFn& f);

/// Deterministic sequence of distinct small rationals: 0, 1, -1, 2, -2, 1/2, ...
std::vector<Rat> sample_points(std::size_t count);

}  // namespace quartet

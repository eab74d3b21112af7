#include <doctest.h>

#include "quartet/exactnum.hpp"

using namespace quartet;

TEST_CASE("rationals are reduced with a positive denominator") {
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(6, -4).den() == 2);
  CHECK(Rat::parse("-10/4").str() == "-5/2");
  CHECK(Rat::parse("7").str() == "7");
  CHECK(Rat::parse("0/5") == Rat(0));
  CHECK_THROWS_AS(Rat::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rat::parse("1 /2"), DomainError);
  CHECK_THROWS_AS(Rat::parse(""), DomainError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK(Rat(-3, 7) < Rat(0));
}

TEST_CASE("big integers never overflow") {
  const Int big = parse_int("123456789012345678901234567890");
  CHECK(to_string(big * big) == "15241578753238836750495351562536198787501905199875019052100");
  CHECK(to_string(parse_int("-42")) == "-42");
  CHECK_THROWS_AS(parse_int("12x"), DomainError);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(Int(16)) == Int(4));
  CHECK_FALSE(isqrt(Int(2)).has_value());
  // t^4 + 2t^2 + 1 at t = 2
  CHECK(isqrt(Int(25)) == Int(5));
  CHECK(isqrt(Int(0)) == Int(0));
  CHECK_THROWS_AS(isqrt(Int(-1)), DomainError);
  for (long n = 0; n < 2000; ++n) {
    auto s = isqrt(Int(n));
    long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    CHECK(s.has_value() == (r * r == n));
    if (s) CHECK(*s == r);
  }
}

TEST_CASE("rat_sqrt") {
  CHECK(rat_sqrt(Rat(9, 4)) == Rat(3, 2));
  CHECK_FALSE(rat_sqrt(Rat(-1)).has_value());
  CHECK(rat_sqrt(Rat(625, 256)) == Rat(25, 16));
  CHECK_FALSE(rat_sqrt(Rat(2, 9)).has_value());
  CHECK_FALSE(rat_sqrt(Rat(9, 2)).has_value());
}

TEST_CASE("fourth-power-free decomposition") {
  auto check = [](const Rat& q, const Rat& core, const Rat& scale) {
    const auto s = fourth_power_free_rat(q);
    CHECK(s.core == core);
    CHECK(s.scale == scale);
    CHECK(s.core * s.scale.pow(4) == q);
  };
  check(Rat(16), Rat(1), Rat(2));
  check(Rat(48), Rat(3), Rat(2));
  check(Rat(625, 256), Rat(1), Rat(5, 4));
  check(Rat(1, 8), Rat(2), Rat(1, 2));
  check(Rat(-1, 4), Rat(-4), Rat(1, 2));
  check(Rat(625, 729), Rat(9), Rat(5, 9));
  CHECK_THROWS_AS(fourth_power_free_rat(Rat(0)), DomainError);

  const auto f = fourth_power_free(Int(-2) * 81 * 81 * 7 * 16);
  CHECK(f.core == -14);
  CHECK(f.root == 18);
  // cofactors beyond the trial-division limit
  const Int m61 = (Int(1) << 61) - 1;  // prime
  const Int m31 = (Int(1) << 31) - 1;  // prime
  CHECK(fourth_power_free(m31 * m31 * m31 * m31 * 3).core == 3);
  CHECK(fourth_power_free(m31 * m31 * m31 * m31 * 3).root == m31);
  CHECK(fourth_power_free(m61 * 5).core == m61 * 5);
  CHECK_THROWS_AS(fourth_power_free(m61 * m61 * ((Int(1) << 89) - 1)), DomainError);
  // no prime to the fourth power survives
  for (long m = 1; m < 3000; ++m) {
    const auto s = fourth_power_free(Int(m));
    CHECK(s.core * s.root * s.root * s.root * s.root == m);
    for (long p = 2; p * p * p * p <= m; ++p) CHECK(s.core % (p * p * p * p) != 0);
  }
}

TEST_CASE("primitive_normalize") {
  auto r = primitive_normalize({Int(10112), Int(-3776), Int(8512), Int(8576)});
  CHECK(r.values == std::vector<Int>{158, -59, 133, 134});
  CHECK(r.gcd == 64);
  r = primitive_normalize({Int(2), Int(4), Int(6), Int(8)});
  CHECK(r.values == std::vector<Int>{1, 2, 3, 4});
  CHECK(r.gcd == 2);
  r = primitive_normalize({Int(7), Int(157), Int(-227), Int(239)});
  CHECK(r.values == std::vector<Int>{7, 157, -227, 239});
  CHECK(r.gcd == 1);
  CHECK_THROWS_AS(primitive_normalize({Int(0), Int(0)}), DomainError);
  CHECK(clear_and_normalize({Rat(1, 2), Rat(-1, 3), Rat(0)}) == std::vector<Int>{3, -2, 0});
}

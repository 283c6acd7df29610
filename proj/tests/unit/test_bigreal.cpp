#include "doctest.h"
#include "test_support.hpp"

#include "quintic/bigcomplex.hpp"
#include "quintic/errors.hpp"
#include "quintic/rational.hpp"

#include <random>

using namespace quintic;
using quintic::testing::within;

TEST_CASE("arithmetic keeps the wider precision") {
  const BigReal a(3, 128);
  const BigReal b(7, 600);
  CHECK((a + b).precision() == 600);
  CHECK((a * 2).precision() == 128);
  CHECK(a + b == BigReal(10, 64));
  CHECK(1 - a == BigReal(-2, 64));
  CHECK(1 / BigReal(4, 64) == BigReal::parse("0.25", 64));
}

TEST_CASE("comparisons against machine integers") {
  const BigReal half = BigReal::parse("0.5", 200);
  CHECK(half < 1);
  CHECK(half > 0);
  CHECK(0 < half);
  CHECK_FALSE(half == 0);
  CHECK(BigReal(2, 64) == 2);
}

TEST_CASE("parse rejects garbage") {
  CHECK_THROWS_AS(BigReal::parse("1.5x", 128), std::invalid_argument);
  CHECK_THROWS_AS(BigReal::parse("", 128), std::invalid_argument);
}

TEST_CASE("exact string round-trips bit for bit") {
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> unit(-40.0, 40.0);
  for (mpfr_prec_t bits : {64, 333, 576, 1088}) {
    for (int i = 0; i < 25; ++i) {
      const BigReal x = exp(BigReal::parse(std::to_string(unit(gen)), bits)) / 7;
      const BigReal back = BigReal::parse(x.to_exact_string(), bits);
      CHECK(back == x);
    }
  }
}

TEST_CASE("decimal rendering") {
  const BigReal third = BigReal(1, 256) / 3;
  CHECK(third.to_scientific(5) == "3.3333e-01");
  CHECK(third.to_decimal(4) == "0.3333");
}

TEST_CASE("move leaves a usable object") {
  BigReal a(5, 128);
  BigReal b = std::move(a);
  CHECK(b == 5);
  a = BigReal(2, 128);
  CHECK(a == 2);
}

TEST_CASE("complex principal branches") {
  const mpfr_prec_t bits = 256;
  // sqrt(-4) = 2i
  const BigComplex s = sqrt(BigComplex(BigReal(-4, bits), BigReal(bits)));
  CHECK(abs(s.re) < BigReal::pow2(-250, bits));
  CHECK(within(s.im, BigReal(2, bits), 70));

  // cube root of -8 on the principal branch is 1 + i sqrt(3)
  const BigComplex c = cbrt(BigComplex(BigReal(-8, bits), BigReal(bits)));
  CHECK(within(c.re, BigReal(1, bits), 70));
  CHECK(within(c.im, sqrt(BigReal(3, bits)), 70));

  const BigComplex z(BigReal(3, bits), BigReal(-2, bits));
  const BigComplex w = cbrt(z);
  const BigComplex back = w * w * w;
  CHECK(within(back.re, z.re, 70));
  CHECK(within(back.im, z.im, 70));
  CHECK(arg(w) < 0);
}

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("7").den() == 1);
  CHECK((Rational(1, 25) * Rational(25)).is_one());
  CHECK(Rational(1, 5).reciprocal() == Rational(5));
  CHECK(Rational(125, 25).to_string() == "5");
  CHECK_THROWS_AS(Rational::parse("abc"), UsageError);
  CHECK_THROWS_AS(Rational::parse("1/"), UsageError);
  CHECK_THROWS_AS(Rational::parse("0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("-1"), DomainError);
  CHECK_THROWS_AS(Rational(1LL << 62) * Rational(25), DomainError);
}

TEST_CASE("precision context validation") {
  CHECK_NOTHROW(PrecisionContext());
  CHECK_THROWS_AS(PrecisionContext(32), DomainError);
  // 120 * log2(10) + 64 = 462.6 bits: does not fit in 400
  CHECK_THROWS_AS(PrecisionContext(400, 120, 64), DomainError);
  CHECK_NOTHROW(PrecisionContext(1024, 120, 64));
  const PrecisionContext ctx;
  CHECK(ctx.working_bits() == 576);
  CHECK(ctx.tolerance() == quintic::testing::ten_to_minus(120, ctx.working_bits()));
  CHECK(ctx.doubled().precision_bits() == 1024);
}

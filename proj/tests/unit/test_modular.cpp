#include "doctest.h"
#include "test_support.hpp"

#include "quintic/errors.hpp"
#include "quintic/modular.hpp"

using namespace quintic;
using namespace quintic::testing;

namespace {

const PrecisionContext ctx;

BigReal a_from_pentagonal(const Rational& r) {
  const BigReal q = nome(r, ctx);
  return pow(pentagonal_eta(q, ctx.working_bits()), 6) /
         (q * pow(pentagonal_eta(pow(q, 5), ctx.working_bits()), 6));
}

BigReal a_from_rrcf(const BigReal& R) {
  const BigReal R5 = pow(R, 5);
  return 1 / R5 - 11 - R5;
}

}  // namespace

TEST_CASE("multiplier M5") {
  const M5Record one = multiplier_M5(Rational(1), ctx);
  CHECK(one.m5.to_double() == doctest::Approx(0.847).epsilon(1e-3));
  const BigReal k_ratio = elliptic_K(radical_k25(ctx), ctx) / elliptic_K(1 / sqrt(ctx.num(2)), ctx);
  CHECK(within(one.m5, k_ratio, 120));
  CHECK(one.poly_residual < ctx.tolerance());

  for (const Rational& r : {Rational(1), Rational(3, 2), Rational(2), Rational(5), Rational(7), Rational(1, 5)}) {
    CAPTURE(r.to_string());
    const auto at_r = solve_singular_modulus(r, ctx);
    const auto at_25r = solve_singular_modulus(r * Rational(25), ctx);
    const M5Record m = multiplier_M5(at_r, at_25r);
    CHECK(m.poly_residual < ctx.tolerance());
    CHECK(within(m.m5 * at_r.K_k, at_25r.K_k, 120));
    if (r.at_least_one()) {
      CHECK(m.m5 > ctx.ratio(1, 5));
      CHECK(m.m5 < 1);
    }
  }
}

TEST_CASE("a_r by eta quotient and by moduli") {
  const ARecord one = a_value(Rational(1), ctx);
  CHECK(within(one.via_eta, a_from_pentagonal(Rational(1)), 150));
  for (const Rational& r : {Rational(1), Rational(2), Rational(3, 2), Rational(5)}) {
    CAPTURE(r.to_string());
    const ARecord rec = a_value(r, ctx);
    CHECK(rec.a > 0);
    CHECK(rec.cross_residual < ctx.tolerance());
  }
}

TEST_CASE("a_4 is the sixth power of the q^2 / q^10 eta quotient at q = e^-pi") {
  const BigReal q = nome(Rational(1), ctx);
  const BigReal A = eta_f(q * q, ctx) / (root(q, 3) * eta_f(pow(q, 10), ctx));
  CHECK(within(pow(A, 6), a_value(Rational(4), ctx).via_moduli, 120));
}

TEST_CASE("truncated continued fraction") {
  const BigReal q = ctx.parse("1e-20");
  const BigReal lead = root(q, 5) * (1 - q);
  CHECK(abs(rrcf_truncated(q, 8, ctx) - lead) <= 2 * root(q, 5) * q * q);

  const BigReal R4 = rrcf_converged(nome(Rational(4), ctx), ctx);
  const BigReal s5 = sqrt(ctx.num(5));
  CHECK(R4.to_double() == doctest::Approx(0.2840790).epsilon(1e-7));
  CHECK(within(R4, sqrt((5 + s5) / 2) - (1 + s5) / 2, 100));

  // Successive approximants settle monotonically once depth is modest.
  const BigReal qs = nome(Rational(1, 25), ctx);
  BigReal last_gap = abs(rrcf_truncated(qs, 12, ctx) - rrcf_truncated(qs, 2, ctx));
  for (long depth = 12; depth < 62; depth += 10) {
    const BigReal gap = abs(rrcf_truncated(qs, depth + 10, ctx) - rrcf_truncated(qs, depth, ctx));
    CHECK(gap <= last_gap);
    if (!last_gap.is_zero()) CHECK(gap < last_gap);
    last_gap = gap;
  }

  CHECK_THROWS_AS(rrcf_truncated(ctx.num(1), 10, ctx), DomainError);
  CHECK_THROWS_AS(rrcf_truncated(q, 0, ctx), DomainError);
  CHECK_THROWS_AS(rrcf_truncated(q, 1L << 40, ctx), DomainError);
}

TEST_CASE("closed-form continued fraction agrees with truncation") {
  for (const Rational& r : {Rational(1), Rational(4), Rational(5), Rational(3, 2), Rational(1, 5)}) {
    CAPTURE(r.to_string());
    const BigReal closed = rrcf_closed(r, ctx);
    CHECK(within(closed, rrcf_converged(nome(r, ctx), ctx), 100));
    CHECK(closed > 0);
    CHECK(closed < 1);
  }
}

TEST_CASE("theta form") {
  const BigReal y0 = ctx.parse("1.7");
  const BigReal a = 2 * sinh(y0) - 11;
  CHECK(within(theta_form(a, ctx).y, y0, 150));

  const BigReal a1 = a_from_eta(Rational(1), ctx);
  CHECK(within(theta_form(a1, ctx).R, rrcf_closed(Rational(1), ctx), 150));

  BigReal previous = theta_form(ctx.num(1), ctx).R;
  for (long big : {10L, 1000L, 100000L, 10000000L}) {
    const BigReal R = theta_form(ctx.num(big), ctx).R;
    CHECK(R < previous);
    previous = R;
  }
  CHECK_THROWS_AS(theta_form(ctx.num(-11), ctx), DomainError);
}

TEST_CASE("descent on v") {
  const BigReal v = ctx.parse("1e-12");
  const BigReal d = descend_v(v, ctx);
  CHECK(abs(d / root(v, 5) - 1) <= 2 * v);

  const BigReal v100 = rrcf_converged(nome(Rational(100), ctx), ctx);
  const BigReal v4 = rrcf_converged(nome(Rational(4), ctx), ctx);
  CHECK(within(descend_v(v100, ctx), v4, 150));

  for (const char* s : {"0.001", "0.2", "0.5", "0.9", "0.999"}) {
    const BigReal out = descend_v(ctx.parse(s), ctx);
    CHECK(out > 0);
    CHECK(out < 1);
  }
  CHECK_THROWS_AS(descend_v(ctx.num(0), ctx), DomainError);
  CHECK_THROWS_AS(descend_v(ctx.num(1), ctx), DomainError);
}

TEST_CASE("descent on a") {
  const BigReal a25 = a_from_pentagonal(Rational(25));
  const BigReal a1 = a_from_pentagonal(Rational(1));
  CHECK(within(descend_a(a25, ctx), a1, 120));

  // Route through the continued fraction: a -> R -> descend_v -> a.
  for (const char* s : {"0.5", "3", "17.5", "400", "123456"}) {
    CAPTURE(s);
    const BigReal a = ctx.parse(s);
    const BigReal via_v = a_from_rrcf(descend_v(rrcf_from_a(a, ctx), ctx));
    CHECK(within(descend_a(a, ctx), via_v, 140));
  }

  // Q(a) = a^(1/5) (1 + o(1)); the relative gap shrinks like a^(-1/5).
  BigReal last = ctx.num(1);
  for (const char* s : {"1e6", "1e8"}) {
    const BigReal a = ctx.parse(s);
    const BigReal rel = abs(descend_a(a, ctx) / root(a, 5) - 1);
    CHECK(rel < 7 / root(a, 5));
    CHECK(rel < last);
    last = rel;
  }
  CHECK_THROWS_AS(descend_a(ctx.num(-12), ctx), DomainError);
}

TEST_CASE("a_r from k and w, w polynomial, depressed form orientation") {
  for (const Rational& r : {Rational(1), Rational(5)}) {
    CAPTURE(r.to_string());
    const Thm22Result res = verify_thm22(r, ctx);
    CHECK(res.a_formula_residual < ctx.tolerance());
    CHECK(res.w_poly_residual < ctx.tolerance());
    CHECK(res.orientation == DepressedOrientation::kSwapped);
    CHECK(res.depressed_residual() < ctx.tolerance());
    CHECK(res.depressed_direct > ctx.parse("1e-3"));
    const IdentityFragment frag = res.fragment(r);
    REQUIRE(frag.size() == 3);
    CHECK(frag[2].id == "eq15-depressed");
    CHECK(frag[2].residual < ctx.tolerance());
  }
}

#include "quintic/examples.hpp"

#include "quintic/kernel.hpp"
#include "quintic/ladder.hpp"

namespace quintic {
namespace {

BigReal sqrt5(const PrecisionContext& ctx) { return sqrt(ctx.num(5)); }

/// sqrt(1/2 - sqrt(1 - t)/2), evaluated as written.
BigReal half_minus_half_sqrt(const BigReal& t) {
  BigReal half(1, t.precision());
  half /= 2;
  return sqrt(half - sqrt(1 - t) / 2);
}

ExampleCheck judge(std::string name, std::string form, const Rational& r, BigReal canonical, BigReal verbatim,
                   const PrecisionContext& ctx) {
  BigReal oracle = solve_singular_modulus(r, ctx).k;
  BigReal canonical_residual = abs(canonical - oracle);
  BigReal verbatim_residual = abs(verbatim - oracle);
  const BigReal tol = ctx.tolerance_with_slack(20);
  const bool canonical_ok = canonical_residual < tol;
  const bool verbatim_ok = verbatim_residual < tol;
  return ExampleCheck{std::move(name),
                      std::move(form),
                      r,
                      std::move(oracle),
                      std::move(canonical),
                      std::move(verbatim),
                      std::move(canonical_residual),
                      std::move(verbatim_residual),
                      canonical_ok,
                      verbatim_ok};
}

}  // namespace

BigReal closed_form_k1(const PrecisionContext& ctx) { return 1 / sqrt(ctx.num(2)); }

BigReal closed_form_k5(const PrecisionContext& ctx) {
  const BigReal s5 = sqrt5(ctx);
  return sqrt((9 + 4 * s5 - 2 * sqrt(38 + 17 * s5)) / (18 + 8 * s5));
}

BigReal closed_form_k_one_fifth(const PrecisionContext& ctx) {
  const BigReal s5 = sqrt5(ctx);
  return sqrt((9 + 4 * s5 + 2 * sqrt(38 + 17 * s5)) / (18 + 8 * s5));
}

BigReal closed_form_k25(const PrecisionContext& ctx) {
  const BigReal s5 = sqrt5(ctx);
  return 1 / sqrt(2 * (51841 + 23184 * s5 + 12 * sqrt(37325880 + 16692641 * s5)));
}

std::vector<ExampleCheck> audit_examples(const PrecisionContext& ctx) {
  const BigReal s5 = sqrt5(ctx);
  std::vector<ExampleCheck> out;

  {
    const BigReal kkp5 = modulus_product(closed_form_k5(ctx));
    const BigReal kkp_fifth = modulus_product(closed_form_k_one_fifth(ctx));
    const BigReal canonical = recover_modulus(ascend_once(kkp5, kkp_fifth, ctx), ctx);
    const BigReal p1 = p_map(ctx.num(1), ctx);
    const BigReal verbatim = half_minus_half_sqrt((9 - 4 * s5) * p1 * p1);
    out.push_back(judge("k_125 from k_5, k_1/5", "sqrt(1/2 - sqrt(1 - (9-4sqrt5) P[1]^2)/2)", Rational(125),
                        canonical, verbatim, ctx));
  }
  {
    const BigReal kkp25 = modulus_product(closed_form_k25(ctx));
    const BigReal kkp1 = modulus_product(closed_form_k1(ctx));
    const BigReal canonical = recover_modulus(ascend_once(kkp25, kkp1, ctx), ctx);
    const BigReal big = 161 + 72 * s5;
    const BigReal ratio = p_map(161 - 72 * s5, ctx) / big;
    const BigReal verbatim = half_minus_half_sqrt(ratio * ratio);
    out.push_back(judge("k_625 from k_25, k_1", "sqrt(1/2 - sqrt(1 - (P[161-72sqrt5]/(161+72sqrt5))^2)/2)",
                        Rational(625), canonical, verbatim, ctx));
  }
  return out;
}

}  // namespace quintic

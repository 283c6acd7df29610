#include "quintic/ladder.hpp"

#include "quintic/kernel.hpp"
#include "quintic/modular.hpp"

#include <algorithm>

namespace quintic {
namespace {

constexpr int kLadderSlackDigits = 20;

BigReal cubic(const BigReal& x2, const BigReal& x4, const BigReal& z) {
  return ((x2 * z + 5) * z - x4) * z - x2;
}

BigReal cubic_slope(const BigReal& x2, const BigReal& x4, const BigReal& z) {
  return (3 * x2 * z + 10) * z - x4;
}

/// Cardano-style radical expression for U, principal branches.
BigComplex u_radical(const BigReal& x, const PrecisionContext& ctx) {
  const BigReal x2 = x * x;
  const BigReal x6 = x2 * x2 * x2;
  const BigReal inner = -125 * x6 - 22 * x6 * x6 - x6 * x6 * x6;
  const BigComplex h = cbrt(csqrt(inner) * (3 * sqrt(ctx.num(3))) + (-125 - 9 * x6));
  const BigReal three_x2 = 3 * x2;
  const BigComplex sum = (25 / three_x2 + x2 * x2) / h + h * (1 / three_x2) + (-5 / three_x2);
  return sqrt(sum);
}

/// The other two cubic roots, from deflating by the positive one.
std::vector<BranchError::Candidate> cubic_candidates(const BigReal& x, const BigReal& z0) {
  const BigReal x2 = x * x;
  const BigReal x4 = x2 * x2;
  const BigReal b = 5 + x2 * z0;
  const BigReal c = -x4 + b * z0;
  const BigReal disc = b * b - 4 * x2 * c;
  std::vector<BranchError::Candidate> out;
  out.push_back({z0.to_scientific(20), abs(cubic(x2, x4, z0)).to_scientific(4)});
  if (disc.sign() >= 0) {
    for (int s : {1, -1}) {
      const BigReal z = (-b + s * sqrt(disc)) / (2 * x2);
      out.push_back({z.to_scientific(20), abs(cubic(x2, x4, z)).to_scientific(4)});
    }
  } else {
    const BigReal re = -b / (2 * x2);
    const BigReal im = sqrt(-disc) / (2 * x2);
    out.push_back({re.to_scientific(20) + " + " + im.to_scientific(20) + "i", "complex"});
    out.push_back({re.to_scientific(20) + " - " + im.to_scientific(20) + "i", "complex"});
  }
  return out;
}

BigReal twelfth_root_ratio(const BigReal& num, const BigReal& den) { return root(num / den, 12); }

BigReal slack_half(const PrecisionContext& ctx) {
  return BigReal::pow2(-ctx.precision_bits() + ctx.guard_bits(), ctx.working_bits());
}

void require_product_domain(const BigReal& kkp, const char* what, const PrecisionContext& ctx) {
  if (kkp.sign() <= 0 || kkp - ctx.ratio(1, 2) > slack_half(ctx)) {
    throw DomainError(std::string(what) + " must lie in (0, 1/2], got " + kkp.to_scientific(20));
  }
}

}  // namespace

bool LadderTrace::all_certified() const {
  return std::all_of(steps.begin(), steps.end(), [](const LadderStep& s) { return s.certified; });
}

BigReal u_relation(const BigReal& x, const BigReal& y) {
  const BigReal s5 = sqrt(BigReal(5, std::max(x.precision(), y.precision())));
  const BigReal x2 = x * x;
  const BigReal y3 = y * y * y;
  return x2 / (s5 * y) - s5 * y / x2 - (y3 - 1 / y3) / s5;
}

UMapResult u_map(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("u_map requires x > 0");
  const mpfr_prec_t bits = ctx.working_bits();
  const BigReal xw = x.at_precision(bits);
  const BigReal x2 = xw * xw;
  const BigReal x4 = x2 * x2;

  // The cubic is -x^2 at 0, convex on z > 0 and has exactly one positive
  // root. Newton started right of the root decreases monotonically onto it.
  BigReal z = ctx.num(1);
  while (cubic(x2, x4, z).sign() <= 0) z *= 2;
  for (BigReal half = z / 2; cubic(x2, x4, half).sign() > 0; half = z / 2) z = std::move(half);

  for (int i = 0; i < ctx.max_iter(); ++i) {
    const BigReal next = z - cubic(x2, x4, z) / cubic_slope(x2, x4, z);
    if (!(next < z)) break;
    const bool done = (z - next) <= z * BigReal::pow2(-(static_cast<long>(bits) - 4), bits);
    z = next;
    if (done) break;
  }

  BigReal y = sqrt(z);
  BigReal residual = abs(u_relation(xw, y));
  if (!(residual < ctx.tolerance())) {
    throw BranchError("no positive root of the U cubic satisfies the defining relation at x=" +
                          x.to_scientific(20) + " (residual " + residual.to_scientific(4) + ")",
                      cubic_candidates(xw, z));
  }
  BigComplex radical = u_radical(xw, ctx);
  BigReal discrepancy = abs(radical - BigComplex(y));
  const bool agrees = discrepancy < ctx.tolerance();
  return UMapResult{std::move(y), std::move(residual), std::move(radical), std::move(discrepancy), agrees};
}

BigReal u_star(const BigReal& y, const PrecisionContext& ctx) {
  if (y.sign() <= 0) throw DomainError("u_star requires y > 0");
  const BigReal yw = y.at_precision(ctx.working_bits());
  const BigReal y2 = yw * yw;
  const BigReal y6 = y2 * y2 * y2;
  // (y^6 - 1 + S)/(2 y^2) with S - 1 = (18 y^6 + y^12)/(S + 1): same value,
  // no cancellation when y is small.
  const BigReal s = sqrt(1 + 18 * y6 + y6 * y6);
  const BigReal x2 = (y6 + (18 * y6 + y6 * y6) / (s + 1)) / (2 * y2);
  return sqrt(x2);
}

BigReal p_map(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("p_map requires x > 0");
  const BigReal a = pow(u_star(x, ctx), 6);
  const BigReal descended = descend_a(a, ctx);
  if (descended.sign() <= 0) {
    throw BranchError("Q(U*(x)^6) is not positive at x=" + x.to_scientific(20));
  }
  return u_map(root(descended, 6), ctx).y;
}

GRecord g_invariant(const Rational& r, const PrecisionContext& ctx) {
  const auto rec = solve_singular_modulus(r, ctx);
  return GRecord{r, 1 / root(2 * rec.k * rec.k_comp, 12)};
}

Thm31Result verify_thm31(const Rational& r, const PrecisionContext& ctx) {
  const BigReal q = nome(r, ctx);
  const BigReal A = eta_f(q * q, ctx) / (root(q, 3) * eta_f(pow(q, 10), ctx));
  const BigReal a4r = a_value(r * Rational(4), ctx).via_moduli;
  const BigReal v = g_invariant(r * Rational(25), ctx).g / g_invariant(r, ctx).g;
  return Thm31Result{abs(pow(A, 6) - a4r), abs(u_relation(A, v))};
}

IdentityFragment Thm31Result::fragment(const Rational& r) const {
  return {IdentityCheck{"eq29-thm31", "r=" + r.to_string(), max(eta_vs_moduli, relation),
                        "A^6 vs a_4r " + eta_vs_moduli.to_scientific(3) + "; relation " +
                            relation.to_scientific(3)}};
}

IdentityCheck verify_thm32(const Rational& r, const PrecisionContext& ctx) {
  const BigReal g_low = g_invariant(r / Rational(25), ctx).g;
  const BigReal g_mid = g_invariant(r, ctx).g;
  const BigReal g_high = g_invariant(r * Rational(25), ctx).g;
  return IdentityCheck{"eq30-thm32", "r=" + r.to_string(), abs(g_mid / g_low - p_map(g_high / g_mid, ctx)), ""};
}

IdentityCheck verify_thm33(const Rational& r, const PrecisionContext& ctx) {
  auto product = [&](const Rational& s) {
    const auto rec = solve_singular_modulus(s, ctx);
    return rec.k * rec.k_comp;
  };
  const BigReal low = product(r / Rational(25));
  const BigReal mid = product(r);
  const BigReal high = product(r * Rational(25));
  return IdentityCheck{"eq34-thm33", "r=" + r.to_string(),
                       abs(twelfth_root_ratio(high, mid) - p_map(twelfth_root_ratio(mid, low), ctx)), ""};
}

AscentStep ascend_detail(const BigReal& kkp_r, const BigReal& kkp_r_over_25, const PrecisionContext& ctx) {
  require_product_domain(kkp_r, "kk' at r", ctx);
  require_product_domain(kkp_r_over_25, "kk' at r/25", ctx);
  BigReal argument = twelfth_root_ratio(kkp_r, kkp_r_over_25);
  BigReal p = p_map(argument, ctx);
  BigReal kkp = kkp_r.at_precision(ctx.working_bits()) * pow(p, 12);
  return AscentStep{std::move(argument), std::move(p), std::move(kkp)};
}

BigReal ascend_once(const BigReal& kkp_r, const BigReal& kkp_r_over_25, const PrecisionContext& ctx) {
  return ascend_detail(kkp_r, kkp_r_over_25, ctx).kkprime;
}

BigReal recover_modulus(const BigReal& kkp, const PrecisionContext& ctx) {
  const BigReal p = kkp.at_precision(ctx.working_bits());
  BigReal radicand = 1 - 4 * p * p;
  if (radicand.sign() < 0) {
    // k k' <= 1/2 exactly; only rounding can push the radicand below zero.
    if (radicand < -slack_half(ctx)) {
      throw BranchError("1 - 4(kk')^2 = " + radicand.to_scientific(6) + " is negative beyond rounding");
    }
    radicand = ctx.num(0);
  }
  return p * sqrt(2 / (1 + sqrt(radicand)));
}

LadderTrace ladder(const Rational& r0, const BigReal& k_r0, const BigReal& k_r0_over25, int n,
                   const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("ladder needs n >= 1");
  for (const BigReal* k : {&k_r0, &k_r0_over25}) {
    if (k->sign() <= 0 || *k >= 1) throw DomainError("seed moduli must lie in (0, 1)");
  }

  LadderTrace trace{r0, n, {}};
  BigReal lower = modulus_product(k_r0_over25.at_precision(ctx.working_bits()));
  BigReal upper = modulus_product(k_r0.at_precision(ctx.working_bits()));
  Rational level_r = r0;
  const BigReal tol = ctx.tolerance_with_slack(kLadderSlackDigits);

  for (int j = 1; j <= n; ++j) {
    level_r = level_r * Rational(25);
    if (!level_r.at_least_one()) {
      throw BranchError("level r=" + level_r.to_string() +
                        " is below 1, where kk' determines k'_r rather than k_r; ascend from the reciprocal "
                        "seeds and use k_{1/r} = k'_r");
    }
    AscentStep step = ascend_detail(upper, lower, ctx);
    BigReal k = recover_modulus(step.kkprime, ctx);
    auto oracle = solve_singular_modulus(level_r, ctx);
    BigReal residual = abs(k - oracle.k);
    const bool ok = residual < tol;

    trace.steps.push_back(LadderStep{j, level_r, std::move(step.argument), std::move(step.p_value), step.kkprime,
                                     std::move(k), std::move(oracle.k), std::move(residual), ok});
    if (!ok) {
      std::string what = "ladder level r=" + level_r.to_string() + " misses the direct solve by " +
                         trace.steps.back().oracle_residual.to_scientific(4);
      throw LadderCertificationError(what, std::move(trace));
    }
    lower = std::move(upper);
    upper = std::move(step.kkprime);
  }
  return trace;
}

}  // namespace quintic

#include "quintic/kernel.hpp"

#include "quintic/errors.hpp"

#include <algorithm>
#include <string>

namespace quintic {
namespace {

/// K(m')/K(m) - target, parametrized by u = log m.
class RatioEquation {
 public:
  RatioEquation(BigReal target, const PrecisionContext& ctx) : target_(std::move(target)), ctx_(ctx) {}

  BigReal operator()(const BigReal& u) const {
    const BigReal m = exp(u);
    const BigReal m_comp = sqrt((1 - m) * (1 + m));
    return agm(ctx_.num(1), m_comp, ctx_) / agm(ctx_.num(1), m, ctx_) - target_;
  }

 private:
  BigReal target_;
  const PrecisionContext& ctx_;
};

bool small_enough(const BigReal& step, const BigReal& u, long bits) {
  const BigReal scale = max(abs(u), BigReal(1, u.precision()));
  return abs(step) <= BigReal::pow2(-bits, u.precision()) * scale;
}

/// Root u of the strictly decreasing `g`; the target is >= 1, so u <= log(1/sqrt 2).
BigReal solve_log_small_modulus(const RatioEquation& g, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.working_bits();
  const BigReal ln2 = log(ctx.num(2));
  // m = 2^(-1/4) > 1/sqrt(2), so the ratio there is strictly below 1 <= target
  // and the root at r = 1 sits inside the bracket rather than on its edge.
  BigReal hi = -ln2 / 4;
  BigReal lo = -ln2 * (ctx.precision_bits() / 2);

  int iterations = 0;
  auto count = [&] {
    if (++iterations > ctx.max_iter()) {
      throw ConvergenceError("singular modulus solver exceeded max_iter=" + std::to_string(ctx.max_iter()),
                             lo.to_scientific(30), hi.to_scientific(30));
    }
  };

  // Moduli below 2^-(precision_bits/2) occur for large r; push the lower
  // end of the bracket out in log space until the ratio exceeds the target.
  while (g(lo).sign() <= 0) {
    count();
    hi = lo;
    lo *= 2;
  }

  while (!small_enough(hi - lo, lo, 50)) {
    count();
    BigReal mid = (lo + hi) / 2;
    (g(mid).sign() > 0 ? lo : hi) = std::move(mid);
  }

  const BigReal h = BigReal::pow2(-(ctx.precision_bits() / 3), bits);
  BigReal u = (lo + hi) / 2;
  // Quadratic convergence from 50 bits needs a handful of steps; the cap
  // only guards against rounding noise keeping the step above threshold.
  for (int newton = 0; newton < 64; ++newton) {
    count();
    const BigReal value = g(u);
    if (value.is_zero()) break;
    (value.sign() > 0 ? lo : hi) = u;
    const BigReal slope = (g(u + h) - g(u - h)) / (2 * h);
    BigReal next = u - value / slope;
    if (!(next >= lo && next <= hi)) next = (lo + hi) / 2;
    const BigReal step = next - u;
    u = std::move(next);
    if (small_enough(step, u, bits - 4)) break;
  }
  return u;
}

}  // namespace

BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx) {
  if (a.sign() <= 0 || b.sign() <= 0) {
    throw DomainError("agm requires positive arguments");
  }
  const mpfr_prec_t bits = ctx.working_bits();
  BigReal x = a.at_precision(bits);
  BigReal y = b.at_precision(bits);
  const BigReal stop = BigReal::pow2(-ctx.precision_bits() + ctx.guard_bits() / 2, bits);
  for (int i = 0; abs(x - y) >= stop * x; ++i) {
    if (i >= ctx.max_iter()) throw ConvergenceError("agm exceeded max_iter");
    BigReal next = (x + y) / 2;
    y = sqrt(x * y);
    x = std::move(next);
  }
  return (x + y) / 2;
}

BigReal elliptic_K_from_complement(const BigReal& x_comp, const PrecisionContext& ctx) {
  return ctx.pi() / (2 * agm(ctx.num(1), x_comp, ctx));
}

BigReal elliptic_K(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() < 0 || x >= 1) throw DomainError("elliptic_K requires 0 <= x < 1");
  const BigReal xw = x.at_precision(ctx.working_bits());
  return elliptic_K_from_complement(sqrt((1 - xw) * (1 + xw)), ctx);
}

BigReal nome(const Rational& r, const PrecisionContext& ctx) {
  return exp(-ctx.pi() * r.sqrt_value(ctx.working_bits()));
}

SingularModulusRecord solve_singular_modulus(const Rational& r, const PrecisionContext& ctx) {
  const bool above_one = r.at_least_one();
  const Rational s = above_one ? r : r.reciprocal();
  const RatioEquation g(s.sqrt_value(ctx.working_bits()), ctx);

  const BigReal small = exp(solve_log_small_modulus(g, ctx));
  const BigReal large = sqrt((1 - small) * (1 + small));

  SingularModulusRecord rec{
      .r = r,
      .k = above_one ? small : large,
      .k_comp = above_one ? large : small,
      .q = nome(r, ctx),
      .K_k = BigReal(ctx.working_bits()),
      .K_kcomp = BigReal(ctx.working_bits()),
      .residual = BigReal(ctx.working_bits()),
  };
  rec.K_k = elliptic_K_from_complement(rec.k_comp, ctx);
  rec.K_kcomp = elliptic_K_from_complement(rec.k, ctx);
  rec.residual = abs(rec.K_kcomp / rec.K_k - r.sqrt_value(ctx.working_bits()));
  if (rec.residual >= ctx.tolerance()) {
    throw ConvergenceError("singular modulus at r=" + r.to_string() + " has residual " +
                               rec.residual.to_scientific(6),
                           rec.k.to_scientific(30), rec.k.to_scientific(30));
  }
  return rec;
}

BigReal eta_f(const BigReal& q, const PrecisionContext& ctx) {
  if (q.sign() <= 0 || q >= 1) throw DomainError("eta_f requires 0 < q < 1");
  const mpfr_prec_t bits = ctx.working_bits();
  const BigReal qw = q.at_precision(bits);
  const BigReal cutoff = BigReal::pow2(-(ctx.precision_bits() + ctx.guard_bits()), bits);
  BigReal product = ctx.num(1);
  BigReal power = qw;
  for (int n = 1; power >= cutoff; ++n) {
    if (n > ctx.max_iter()) {
      throw ConvergenceError("eta product needs more than max_iter=" + std::to_string(ctx.max_iter()) +
                             " factors at q=" + q.to_scientific(10));
    }
    product *= 1 - power;
    power *= qw;
  }
  return product;
}

BigReal modulus_product(const BigReal& k) { return k * sqrt((1 - k) * (1 + k)); }

}  // namespace quintic

#include "quintic/modular.hpp"

#include "quintic/errors.hpp"

#include <array>

namespace quintic {
namespace {

constexpr long kMaxDepth = 1L << 26;

}  // namespace

const char* to_string(DepressedOrientation o) {
  switch (o) {
    case DepressedOrientation::kDirect:
      return "u=k_r^(1/4), v=k_25r^(1/4)";
    case DepressedOrientation::kSwapped:
      return "u=k_25r^(1/4), v=k_r^(1/4)";
    case DepressedOrientation::kNeither:
      return "neither orientation vanishes";
  }
  return "";
}

M5Record multiplier_M5(const SingularModulusRecord& at_r, const SingularModulusRecord& at_25r) {
  // m5 is the K-ratio itself; the sextic is only a certificate, so no root
  // of it is ever selected.
  BigReal m = at_25r.K_k / at_r.K_k;
  const BigReal kk = at_r.k * at_r.k_comp;
  BigReal residual = abs(pow(5 * m - 1, 5) * (1 - m) - 256 * kk * kk * m);
  return M5Record{at_r.r, std::move(m), std::move(residual)};
}

M5Record multiplier_M5(const Rational& r, const PrecisionContext& ctx) {
  return multiplier_M5(solve_singular_modulus(r, ctx), solve_singular_modulus(r * Rational(25), ctx));
}

BigReal a_from_eta(const Rational& r, const PrecisionContext& ctx) {
  const BigReal q = nome(r, ctx);
  return pow(eta_f(q, ctx), 6) / (q * pow(eta_f(pow(q, 5), ctx), 6));
}

ARecord a_value(const Rational& r, const PrecisionContext& ctx) {
  const auto at_r = solve_singular_modulus(r, ctx);
  const auto at_25r = solve_singular_modulus(r * Rational(25), ctx);
  const M5Record m5 = multiplier_M5(at_r, at_25r);

  BigReal via_moduli =
      pow(at_r.k_comp / at_25r.k_comp, 2) * sqrt(at_r.k / at_25r.k) / pow(m5.m5, 3);
  BigReal via_eta = a_from_eta(r, ctx);
  BigReal cross = abs(via_eta - via_moduli);
  return ARecord{r, via_eta, via_eta, std::move(via_moduli), std::move(cross)};
}

BigReal rrcf_truncated(const BigReal& q, long depth, const PrecisionContext& ctx) {
  if (q.sign() <= 0 || q >= 1) throw DomainError("rrcf_truncated requires 0 < q < 1");
  if (depth < 1 || depth > kMaxDepth) {
    throw DomainError("rrcf_truncated depth must lie in [1, " + std::to_string(kMaxDepth) + "]");
  }
  const BigReal qw = q.at_precision(ctx.working_bits());
  BigReal power = pow(qw, depth);
  BigReal tail(ctx.working_bits());
  for (long n = depth; n >= 1; --n) {
    tail = power / (1 + tail);
    power /= qw;
  }
  return root(qw, 5) / (1 + tail);
}

BigReal rrcf_converged(const BigReal& q, const PrecisionContext& ctx) {
  const BigReal tol = ctx.tolerance();
  long depth = ctx.precision_bits();
  BigReal previous = rrcf_truncated(q, depth, ctx);
  for (;;) {
    if (depth > kMaxDepth / 2) {
      throw ConvergenceError("continued fraction did not settle by depth " + std::to_string(depth));
    }
    depth *= 2;
    BigReal next = rrcf_truncated(q, depth, ctx);
    if (abs(next - previous) < tol) return next;
    previous = std::move(next);
  }
}

BigReal rrcf_from_a(const BigReal& a, const PrecisionContext& ctx) {
  // (-11 - a + sqrt(125 + 22a + a^2)) / 2 rewritten as 2/(sqrt(...) + 11 + a);
  // equal algebraically, without the cancellation for large a.
  const BigReal aw = a.at_precision(ctx.working_bits());
  const BigReal disc = 125 + 22 * aw + aw * aw;
  if (disc.sign() < 0) throw Error("negative discriminant in RRCF closed form");
  return root(2 / (sqrt(disc) + 11 + aw), 5);
}

BigReal rrcf_closed(const Rational& r, const PrecisionContext& ctx) {
  return rrcf_from_a(a_from_eta(r, ctx), ctx);
}

ThetaForm theta_form(const BigReal& a, const PrecisionContext& ctx) {
  if (a <= -11) throw DomainError("theta_form requires a > -11");
  BigReal y = asinh((11 + a.at_precision(ctx.working_bits())) / 2);
  BigReal R = exp(-y / 5);
  return ThetaForm{std::move(y), std::move(R)};
}

BigReal descend_v(const BigReal& v, const PrecisionContext& ctx) {
  if (v.sign() <= 0 || v >= 1) throw DomainError("descend_v requires 0 < v < 1");
  const BigReal x = v.at_precision(ctx.working_bits());
  const BigReal x2 = x * x;
  const BigReal x3 = x2 * x;
  const BigReal x4 = x2 * x2;
  const BigReal num = 1 - 2 * x + 4 * x2 - 3 * x3 + x4;
  const BigReal den = 1 + 3 * x + 4 * x2 + 2 * x3 + x4;
  if (den.is_zero()) throw DomainError("descend_v denominator vanished");
  return root(x * num / den, 5);
}

BigReal descend_a(const BigReal& a, const PrecisionContext& ctx) {
  const ThetaForm theta = theta_form(a, ctx);
  const BigReal t = exp(theta.y / 5);
  std::array<BigReal, 10> p{ctx.num(1), t, t, t, t, t, t, t, t, t};
  for (std::size_t i = 2; i < p.size(); ++i) p[i] = p[i - 1] * t;

  const BigReal numerator = pow(-1 - p[1] + p[2], 5);
  const BigReal denominator =
      p[1] - p[2] + 2 * p[3] - 3 * p[4] + 5 * p[5] + 3 * p[6] + 2 * p[7] + p[8] + p[9];
  return numerator / denominator;
}

Thm22Result verify_thm22(const Rational& r, const PrecisionContext& ctx) {
  const auto at_r = solve_singular_modulus(r, ctx);
  const auto at_25r = solve_singular_modulus(r * Rational(25), ctx);
  const BigReal& k = at_r.k;
  const BigReal& kc = at_r.k_comp;
  const BigReal w = sqrt(k * at_25r.k);
  const BigReal wc = sqrt(kc * at_25r.k_comp);
  const BigReal a = a_from_eta(r, ctx);

  const BigReal k2 = k * k;
  const BigReal bracket = w / k + wc / kc - w * wc / (k * kc);
  const BigReal a_formula = pow(k, 3) * (k2 - 1) / (pow(w, 5) - k2 * w) * pow(bracket, 3);

  const BigReal w_poly = pow(k, 6) + pow(k, 3) * (-16 + 10 * k2) * w + 15 * pow(k, 4) * pow(w, 2) -
                       20 * pow(k, 3) * pow(w, 3) + 15 * k2 * pow(w, 4) + k * (10 - 16 * k2) * pow(w, 5) +
                       pow(w, 6);

  auto depressed = [](const BigReal& u, const BigReal& v) {
    const BigReal u2 = u * u;
    const BigReal v2 = v * v;
    return pow(u, 6) - pow(v, 6) + 5 * u2 * v2 * (u2 - v2) + 4 * u * v * (1 - u2 * u2 * v2 * v2);
  };
  const BigReal u = root(k, 4);
  const BigReal v = root(at_25r.k, 4);

  Thm22Result out{
      .a_formula_residual = abs(a_formula - a),
      .w_poly_residual = abs(w_poly),
      .depressed_direct = abs(depressed(u, v)),
      .depressed_swapped = abs(depressed(v, u)),
      .orientation = DepressedOrientation::kNeither,
  };
  const BigReal tol = ctx.tolerance();
  if (out.depressed_direct < tol) {
    out.orientation = DepressedOrientation::kDirect;
  } else if (out.depressed_swapped < tol) {
    out.orientation = DepressedOrientation::kSwapped;
  }
  return out;
}

IdentityFragment Thm22Result::fragment(const Rational& r) const {
  const std::string point = "r=" + r.to_string();
  IdentityFragment out;
  out.push_back({"eq13-thm22", point, a_formula_residual, ""});
  out.push_back({"eq14-w-poly", point, w_poly_residual, ""});
  out.push_back({"eq15-depressed", point, orientation == DepressedOrientation::kNeither
                                              ? min(depressed_direct, depressed_swapped)
                                              : depressed_residual(),
                 to_string(orientation)});
  return out;
}

}  // namespace quintic

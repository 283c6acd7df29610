#pragma once

#include "quintic/bigreal.hpp"
#include "quintic/identity.hpp"
#include "quintic/kernel.hpp"
#include "quintic/precision.hpp"
#include "quintic/rational.hpp"

namespace quintic {

/// The quotient a_r = f(-q)^6 / (q f(-q^5)^6), evaluated two ways.
struct ARecord {
  Rational r;
  BigReal a;  ///< eta-quotient value
  BigReal via_eta;
  BigReal via_moduli;  ///< (k'_r/k'_25r)^2 sqrt(k_r/k_25r) M5^-3
  BigReal cross_residual;
};

/// Degree-5 multiplier M5(r) = K(k_25r)/K(k_r), certified by its sextic.
struct M5Record {
  Rational r;
  BigReal m5;
  /// |(5M-1)^5 (1-M) - 256 (k k')^2 M|
  BigReal poly_residual;
};

struct ThetaForm {
  BigReal y;  ///< arcsinh((11+a)/2)
  BigReal R;  ///< e^(-y/5)
};

/// Which (u, v) assignment makes the depressed sextic vanish.
enum class DepressedOrientation { kDirect, kSwapped, kNeither };

struct Thm22Result {
  BigReal a_formula_residual;
  BigReal w_poly_residual;
  /// Residual with u = k_r^(1/4), v = k_25r^(1/4).
  BigReal depressed_direct;
  /// Residual with the roles of u and v exchanged.
  BigReal depressed_swapped;
  DepressedOrientation orientation;

  const BigReal& depressed_residual() const {
    return orientation == DepressedOrientation::kSwapped ? depressed_swapped : depressed_direct;
  }
  IdentityFragment fragment(const Rational& r) const;
};

const char* to_string(DepressedOrientation o);

M5Record multiplier_M5(const Rational& r, const PrecisionContext& ctx);
/// Same, reusing already solved moduli at r and 25r.
M5Record multiplier_M5(const SingularModulusRecord& at_r, const SingularModulusRecord& at_25r);

/// f(-q)^6 / (q f(-q^5)^6) at q = nome(r).
BigReal a_from_eta(const Rational& r, const PrecisionContext& ctx);

ARecord a_value(const Rational& r, const PrecisionContext& ctx);

/// Backward recurrence of q^(1/5)/(1 + q/(1 + q^2/(1 + ... q^depth))).
BigReal rrcf_truncated(const BigReal& q, long depth, const PrecisionContext& ctx);

/// Truncated continued fraction with depth doubled from precision_bits until
/// two successive values agree to 10^-tol_exp.
BigReal rrcf_converged(const BigReal& q, const PrecisionContext& ctx);

/// R(q) from a_r in closed form, real positive fifth root.
BigReal rrcf_closed(const Rational& r, const PrecisionContext& ctx);
/// Closed form for a given a > 0.
BigReal rrcf_from_a(const BigReal& a, const PrecisionContext& ctx);

ThetaForm theta_form(const BigReal& a, const PrecisionContext& ctx);

/// v_r -> v_{r/25}: fifth root of v (1-2v+4v^2-3v^3+v^4)/(1+3v+4v^2+2v^3+v^4).
BigReal descend_v(const BigReal& v, const PrecisionContext& ctx);

/// a_r -> a_{r/25} through the nine-term exponential quotient Q.
BigReal descend_a(const BigReal& a, const PrecisionContext& ctx);

/// Residuals of the a_r closed form in w, w', the sextic in w and the
/// depressed equation, from solved moduli at r and 25r.
Thm22Result verify_thm22(const Rational& r, const PrecisionContext& ctx);

}  // namespace quintic

#pragma once

#include "quintic/bigreal.hpp"
#include "quintic/precision.hpp"
#include "quintic/rational.hpp"

namespace quintic {

/// Solved singular modulus at r: K(k_comp)/K(k) = sqrt(r).
struct SingularModulusRecord {
  Rational r;
  BigReal k;
  BigReal k_comp;
  BigReal q;
  BigReal K_k;
  BigReal K_kcomp;
  /// |K(k')/K(k) - sqrt(r)|
  BigReal residual;
};

/// Arithmetic-geometric mean of a, b > 0. Returns the common limit at the
/// context's working precision.
BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);

/// Complete elliptic integral of the first kind, K(x) = pi / (2 agm(1, sqrt(1-x^2))),
/// for 0 <= x < 1.
BigReal elliptic_K(const BigReal& x, const PrecisionContext& ctx);

/// K(x) given the complementary modulus x' = sqrt(1-x^2) directly. Avoids
/// the cancellation in 1-x^2 when x is close to 1.
BigReal elliptic_K_from_complement(const BigReal& x_comp, const PrecisionContext& ctx);

/// Nome e^(-pi sqrt(r)).
BigReal nome(const Rational& r, const PrecisionContext& ctx);

/// Singular modulus k_r by bracketing, bisection and finite-difference
/// Newton on the monotone K-ratio. For r < 1 the small modulus k'_r is
/// solved, so k_{1/r} and k'_r come out of the same computation.
/// Throws ConvergenceError if the residual cannot be brought below
/// 10^-tol_exp within max_iter iterations.
SingularModulusRecord solve_singular_modulus(const Rational& r, const PrecisionContext& ctx);

/// Product (1-q)(1-q^2)(1-q^3)..., truncated once q^n drops below
/// 2^-(precision_bits+guard_bits). Requires 0 < q < 1.
BigReal eta_f(const BigReal& q, const PrecisionContext& ctx);

/// k*k' from a modulus, computing 1-k^2 as (1-k)(1+k).
BigReal modulus_product(const BigReal& k);

}  // namespace quintic

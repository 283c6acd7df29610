#pragma once

#include "quintic/bigcomplex.hpp"
#include "quintic/bigreal.hpp"
#include "quintic/errors.hpp"
#include "quintic/identity.hpp"
#include "quintic/precision.hpp"
#include "quintic/rational.hpp"

#include <vector>

namespace quintic {

/// Y = U(X) together with its certificates.
struct UMapResult {
  BigReal y;
  /// Residual of X^2/(sqrt5 Y) - sqrt5 Y/X^2 = (Y^3 - Y^-3)/sqrt5 at (X, y).
  BigReal defining_residual;
  /// Closed complex-radical expression for U, principal branches throughout.
  BigComplex radical;
  /// |radical - y|
  BigReal radical_discrepancy;
  bool radical_agrees;
};

struct GRecord {
  Rational r;
  BigReal g;
};

struct LadderStep {
  int level;
  Rational r;
  BigReal argument;  ///< (kk'_prev / kk'_prevprev)^(1/12)
  BigReal p_value;
  BigReal kkprime;
  BigReal k;
  BigReal oracle_k;
  BigReal oracle_residual;
  bool certified;
};

struct LadderTrace {
  Rational r0;
  int n;
  std::vector<LadderStep> steps;

  bool all_certified() const;
};

/// A ladder level disagreed with the direct solve. Carries every step
/// computed so far, including the failing one.
class LadderCertificationError : public Error {
 public:
  LadderCertificationError(const std::string& what, LadderTrace trace)
      : Error(what), trace(std::move(trace)) {}

  LadderTrace trace;
};

/// Signed left-minus-right of the U/U* defining relation.
BigReal u_relation(const BigReal& x, const BigReal& y);

/// Positive real Y with (X, Y) on the U/U* relation, from the cubic
/// x^2 z^3 + 5 z^2 - x^4 z - x^2 = 0 in z = Y^2. Throws BranchError (with all
/// three cubic roots as candidates) if the positive root fails the relation.
UMapResult u_map(const BigReal& x, const PrecisionContext& ctx);

/// X = U*(Y), the positive root of the same relation solved for X.
BigReal u_star(const BigReal& y, const PrecisionContext& ctx);

/// P(x) = U[ Q(U*(x)^6)^(1/6) ].
BigReal p_map(const BigReal& x, const PrecisionContext& ctx);

/// G_r = 2^(-1/12) (k_r k'_r)^(-1/12).
GRecord g_invariant(const Rational& r, const PrecisionContext& ctx);

struct Thm31Result {
  /// |A^6 - a_4r| with A from the q^2 / q^10 eta quotient and a_4r from moduli.
  BigReal eta_vs_moduli;
  /// Relation between A and V' = G_25r / G_r.
  BigReal relation;
  IdentityFragment fragment(const Rational& r) const;
};

Thm31Result verify_thm31(const Rational& r, const PrecisionContext& ctx);

/// |G_r/G_{r/25} - P(G_25r/G_r)|
IdentityCheck verify_thm32(const Rational& r, const PrecisionContext& ctx);

/// |(kk'_25r / kk'_r)^(1/12) - P((kk'_r / kk'_{r/25})^(1/12))|
IdentityCheck verify_thm33(const Rational& r, const PrecisionContext& ctx);

struct AscentStep {
  BigReal argument;
  BigReal p_value;
  BigReal kkprime;
};

/// kk'_25r = kk'_r * P((kk'_r / kk'_{r/25})^(1/12))^12. Inputs must lie in (0, 1/2].
BigReal ascend_once(const BigReal& kkp_r, const BigReal& kkp_r_over_25, const PrecisionContext& ctx);
AscentStep ascend_detail(const BigReal& kkp_r, const BigReal& kkp_r_over_25, const PrecisionContext& ctx);

/// Smaller root k of k sqrt(1-k^2) = kkp, i.e. sqrt(1/2 - sqrt(1 - 4 kkp^2)/2)
/// evaluated as kkp sqrt(2 / (1 + sqrt(1 - 4 kkp^2))).
BigReal recover_modulus(const BigReal& kkp, const PrecisionContext& ctx);

/// k_{25^j r0} for j = 1..n from k_r0 and k_{r0/25}; every level is checked
/// against a direct solve. Throws BranchError when a level falls below r = 1
/// and LadderCertificationError when a level misses its oracle by more than
/// 10^-(tol_exp-20).
LadderTrace ladder(const Rational& r0, const BigReal& k_r0, const BigReal& k_r0_over25, int n,
                   const PrecisionContext& ctx);

}  // namespace quintic

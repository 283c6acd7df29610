#include "quintic/precision.hpp"

#include "quintic/errors.hpp"

#include <cmath>
#include <string>

namespace quintic {

PrecisionContext::PrecisionContext(int precision_bits, int tol_exp, int guard_bits, int max_iter)
    : precision_bits_(precision_bits), tol_exp_(tol_exp), guard_bits_(guard_bits), max_iter_(max_iter) {
  if (precision_bits < 64) {
    throw DomainError("precision_bits must be at least 64, got " + std::to_string(precision_bits));
  }
  if (tol_exp < 1 || guard_bits < 0 || max_iter < 1) {
    throw DomainError("tol_exp and max_iter must be positive and guard_bits non-negative");
  }
  if (tol_exp * std::log2(10.0) + guard_bits >= precision_bits) {
    throw DomainError("tolerance 1e-" + std::to_string(tol_exp) + " is not representable with " +
                      std::to_string(precision_bits) + " bits and " + std::to_string(guard_bits) +
                      " guard bits");
  }
}

BigReal PrecisionContext::tolerance_with_slack(int slack_digits) const {
  BigReal t(10, working_bits());
  mpfr_pow_si(t.get(), t.get(), -(tol_exp_ - slack_digits), MPFR_RNDN);
  return t;
}

}  // namespace quintic

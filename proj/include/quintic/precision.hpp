#pragma once

#include "quintic/bigreal.hpp"

#include <string_view>

namespace quintic {

/// Working precision, acceptance tolerance and iteration caps.
///
/// Immutable once built. Values are computed at `working_bits()`
/// (= precision_bits + guard_bits); identities are accepted when their
/// residual is below 10^-tol_exp.
class PrecisionContext {
 public:
  /// Throws DomainError unless precision_bits >= 64, max_iter >= 1 and
  /// tol_exp*log2(10) + guard_bits < precision_bits.
  explicit PrecisionContext(int precision_bits = 512, int tol_exp = 120, int guard_bits = 64,
                            int max_iter = 10000);

  int precision_bits() const { return precision_bits_; }
  int tol_exp() const { return tol_exp_; }
  int guard_bits() const { return guard_bits_; }
  int max_iter() const { return max_iter_; }
  mpfr_prec_t working_bits() const { return precision_bits_ + guard_bits_; }

  BigReal num(long value) const { return BigReal(value, working_bits()); }
  BigReal ratio(long num, long den) const { return this->num(num) / den; }
  BigReal parse(std::string_view text) const { return BigReal::parse(text, working_bits()); }
  BigReal pi() const { return BigReal::pi(working_bits()); }

  /// 10^-tol_exp.
  BigReal tolerance() const { return tolerance_with_slack(0); }
  /// 10^-(tol_exp - slack), for checks that compose many operations.
  BigReal tolerance_with_slack(int slack_digits) const;

  /// Same tolerances at doubled precision, for stability probes.
  PrecisionContext doubled() const {
    return PrecisionContext(2 * precision_bits_, tol_exp_, guard_bits_, max_iter_);
  }

 private:
  int precision_bits_;
  int tol_exp_;
  int guard_bits_;
  int max_iter_;
};

}  // namespace quintic

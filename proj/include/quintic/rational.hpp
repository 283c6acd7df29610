#pragma once

#include "quintic/bigreal.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace quintic {

/// Exact positive rational r = num/den in lowest terms.
class Rational {
 public:
  /// Throws DomainError unless num > 0 and den > 0.
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Accepts "p/q" or an integer. Throws UsageError on malformed text and
  /// DomainError for r <= 0.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Throws DomainError on int64 overflow.
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;
  Rational reciprocal() const { return Rational(den_, num_); }

  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool at_least_one() const { return num_ >= den_; }

  /// r rounded to nearest at `bits`, computed fresh as num/den.
  BigReal value(mpfr_prec_t bits) const;
  /// sqrt(r) at `bits`.
  BigReal sqrt_value(mpfr_prec_t bits) const;

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace quintic

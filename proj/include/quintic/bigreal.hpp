#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace quintic {

/// Radix-2 floating value with its own mantissa width, backed by MPFR.
///
/// Binary operations produce a result at the wider of the two operand
/// precisions; operations with a machine integer keep the BigReal's
/// precision. All rounding is to nearest, so results are reproducible bit
/// for bit for a fixed set of inputs and precisions.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits = 64);
  BigReal(long value, mpfr_prec_t bits);

  /// Parses a decimal (or "inf"/"nan") string, rounding to nearest at `bits`.
  /// Throws std::invalid_argument on trailing garbage.
  static BigReal parse(std::string_view text, mpfr_prec_t bits);
  static BigReal pi(mpfr_prec_t bits);
  /// 2^exp exactly.
  static BigReal pow2(long exp, mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded (or widened) to `bits`.
  BigReal at_precision(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Binary exponent e with value = m * 2^e, 0.5 <= |m| < 1.
  long exponent() const { return mpfr_get_exp(value_); }

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_scientific(int digits) const;
  /// Fixed or scientific, whichever is shorter, `digits` significant digits.
  std::string to_decimal(int digits) const;
  /// Shortest scientific string that parses back to the identical bits at
  /// this precision.
  std::string to_exact_string() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator+(long a, BigReal b) { return b += a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(long a, BigReal b) { return b *= a; }
  friend BigReal operator/(long a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cbrt(const BigReal& x);
/// Real n-th root; for odd n negative arguments give the negative root.
BigReal root(const BigReal& x, unsigned long n);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal asinh(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);

}  // namespace quintic

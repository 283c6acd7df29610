#include "quintic/bigreal.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace quintic {
namespace {

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

std::string format(const char* fmt, int digits, mpfr_srcptr x) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, fmt, digits, x) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return std::string(owned.get());
}

template <typename Fn>
BigReal unary(const BigReal& x, Fn fn) {
  BigReal out(x.precision());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, mpfr_prec_t bits) {
  BigReal out(bits);
  std::string buf(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end == buf.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + buf + "'");
  }
  return out;
}

BigReal BigReal::pi(mpfr_prec_t bits) {
  BigReal out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigReal BigReal::pow2(long exp, mpfr_prec_t bits) {
  BigReal out(1, bits);
  mpfr_mul_2si(out.value_, out.value_, exp, MPFR_RNDN);
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::at_precision(mpfr_prec_t bits) const {
  BigReal out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string BigReal::to_scientific(int digits) const {
  return format("%.*Re", std::max(digits, 1) - 1, value_);
}

std::string BigReal::to_decimal(int digits) const {
  return format("%.*Rg", std::max(digits, 1), value_);
}

std::string BigReal::to_exact_string() const {
  const auto digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
  return to_scientific(digits);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal out(b.precision());
  mpfr_si_sub(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal out(b.precision());
  mpfr_si_div(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal cbrt(const BigReal& x) { return unary(x, mpfr_cbrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal asinh(const BigReal& x) { return unary(x, mpfr_asinh); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }

BigReal root(const BigReal& x, unsigned long n) {
  BigReal out(x.precision());
  mpfr_rootn_ui(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal out(wider(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal out(wider(x, y));
  mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, long n) {
  BigReal out(x.precision());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }
BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

}  // namespace quintic

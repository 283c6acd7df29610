#include "quintic/rational.hpp"

#include "quintic/errors.hpp"

#include <charconv>
#include <numeric>

namespace quintic {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("cannot parse '" + std::string(whole) + "' as a rational p/q or integer");
  }
  return v;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("rational overflow");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) {
    throw DomainError("r must be a positive rational, got " + std::to_string(num) + "/" +
                      std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text), 1);
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

Rational Rational::operator*(const Rational& other) const {
  // Cross-reduce first so 25 * (1/25) never overflows.
  const std::int64_t g1 = std::gcd(num_, other.den_);
  const std::int64_t g2 = std::gcd(other.num_, den_);
  return Rational(checked_mul(num_ / g1, other.num_ / g2), checked_mul(den_ / g2, other.den_ / g1));
}

Rational Rational::operator/(const Rational& other) const { return *this * other.reciprocal(); }

BigReal Rational::value(mpfr_prec_t bits) const {
  BigReal out(bits);
  mpfr_set_si(out.get(), static_cast<long>(num_), MPFR_RNDN);
  mpfr_div_si(out.get(), out.get(), static_cast<long>(den_), MPFR_RNDN);
  return out;
}

BigReal Rational::sqrt_value(mpfr_prec_t bits) const {
  // Evaluate with a few extra bits so the quotient's rounding does not show.
  return sqrt(value(bits + 32)).at_precision(bits);
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace quintic

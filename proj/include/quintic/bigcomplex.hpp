#pragma once

#include "quintic/bigreal.hpp"

namespace quintic {

/// Complex pair of BigReals. Only what the radical cross-checks need.
struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit BigComplex(const BigReal& real) : re(real), im(real.precision()) {}

  mpfr_prec_t precision() const { return re.precision(); }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator+(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator/(const BigReal& a, const BigComplex& b);

BigReal abs(const BigComplex& z);
/// Argument in (-pi, pi].
BigReal arg(const BigComplex& z);
/// Principal square root: argument halved from (-pi, pi].
BigComplex sqrt(const BigComplex& z);
/// Principal cube root: argument divided by three.
BigComplex cbrt(const BigComplex& z);
/// Square root of a real that may be negative (i*sqrt(-x) for x < 0).
BigComplex csqrt(const BigReal& x);

}  // namespace quintic

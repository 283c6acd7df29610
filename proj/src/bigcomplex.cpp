#include "quintic/bigcomplex.hpp"

namespace quintic {

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigReal denom = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

BigComplex operator+(const BigComplex& a, const BigReal& b) { return {a.re + b, a.im}; }
BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re * b, a.im * b}; }
BigComplex operator/(const BigReal& a, const BigComplex& b) { return BigComplex(a) / b; }

BigReal abs(const BigComplex& z) {
  BigReal out(z.precision());
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return out;
}

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex sqrt(const BigComplex& z) {
  // sqrt((|z| + re)/2) + i sign(im) sqrt((|z| - re)/2), principal branch.
  const BigReal modulus = abs(z);
  BigReal real = sqrt((modulus + z.re) / 2);
  BigReal imag = sqrt((modulus - z.re) / 2);
  if (z.im.sign() < 0) imag = -imag;
  return {std::move(real), std::move(imag)};
}

BigComplex cbrt(const BigComplex& z) {
  const BigReal modulus = cbrt(abs(z));
  const BigReal angle = arg(z) / 3;
  return {modulus * cos(angle), modulus * sin(angle)};
}

BigComplex csqrt(const BigReal& x) {
  if (x.sign() >= 0) return BigComplex(sqrt(x));
  return {BigReal(x.precision()), sqrt(-x)};
}

}  // namespace quintic

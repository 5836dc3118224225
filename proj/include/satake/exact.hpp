#ifndef SATAKE_EXACT_HPP
#define SATAKE_EXACT_HPP

// Arbitrary-precision integers, rationals, and Gaussian rationals.

#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace satake {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double (every finite double is a dyadic rational).
inline Rational exact_rational(double x)
{
  if (!std::isfinite(x))
    throw std::invalid_argument("exact_rational: non-finite value");
  if (x == 0.0)
    return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  constexpr int digits = std::numeric_limits<double>::digits;
  auto scaled = static_cast<long long>(std::ldexp(mant, digits));
  exp -= digits;
  Integer num(scaled);
  Integer den(1);
  if (exp >= 0)
    num <<= exp;
  else
    den <<= -exp;
  return Rational(num, den);
}

inline double to_double(const Rational& q)
{
  return q.convert_to<double>();
}

/// "p/q" or "p" for integral values.
inline std::string fraction_string(const Rational& q)
{
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

/// Complex number with rational coordinates; a field under + - * /.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r), im(0) {}

  static GaussianRational from_complex(std::complex<double> z)
  {
    return {exact_rational(z.real()), exact_rational(z.imag())};
  }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  Rational norm() const { return re * re + im * im; }
  GaussianRational conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational& operator+=(const GaussianRational& o)
  {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o)
  {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o)
  {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o)
  {
    const Rational d = o.norm();
    if (d == 0)
      throw std::domain_error("GaussianRational: division by zero");
    Rational r = (re * o.re + im * o.im) / d;
    Rational i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b)
  {
    return a.re == b.re && a.im == b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z)
  {
    return os << "(" << fraction_string(z.re) << ", " << fraction_string(z.im) << ")";
  }
};

// Scalar hooks used by the generic algorithms (determinants, series products).
namespace scalar {

inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>{}; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

/// Pivot preference: larger is better. Exact types only need "nonzero".
inline double pivot_weight(const std::complex<double>& z) { return std::abs(z); }
inline double pivot_weight(const GaussianRational& z) { return z.is_zero() ? 0.0 : 1.0; }

inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace scalar

}  // namespace satake

#endif  // SATAKE_EXACT_HPP

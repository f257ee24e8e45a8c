#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffpair {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);
double to_double(const Rational& q);
Rational make_rational(long long num, long long den = 1);

// Rational numbers extended with i. Used where entries are exact, e.g.
// the gamma matrices for rational c.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(implicit)
  GaussianRational(int r) : re(r) {}                  // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

std::string to_string(const GaussianRational& z);

// A real quadratic surd coefficient * sqrt(radicand) with rational parts and
// radicand >= 0. Keeps d_n, i*omega_n and tau_n exact.
class Surd {
 public:
  Surd() = default;
  Surd(Rational coefficient, Rational radicand);

  const Rational& coefficient() const noexcept { return coefficient_; }
  const Rational& radicand() const noexcept { return radicand_; }

  // coefficient^2 * radicand
  Rational square() const { return coefficient_ * coefficient_ * radicand_; }
  double value() const;
  bool is_rational() const noexcept { return radicand_ == 1 || coefficient_ == 0; }

  friend Surd operator*(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b);

 private:
  void normalize();

  Rational coefficient_{0};
  Rational radicand_{1};
};

std::string to_string(const Surd& s);

}  // namespace ffpair

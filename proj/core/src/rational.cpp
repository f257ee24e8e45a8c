#include "ffpair/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "ffpair/error.hpp"

namespace ffpair {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::degenerate_frequency: return "degenerate frequency";
    case ErrorKind::infinite_radius: return "infinite radius";
    case ErrorKind::inconsistent_bundle: return "inconsistent bundle";
    case ErrorKind::singular_point: return "singular point";
    case ErrorKind::regular_singular_point: return "regular singular point";
    case ErrorKind::indicial_degeneracy: return "indicial degeneracy";
    case ErrorKind::leading_coefficient_singular: return "leading coefficient singular";
    case ErrorKind::excluded_state: return "excluded state";
    case ErrorKind::singular_sample: return "singular sample";
    case ErrorKind::step_limit: return "step limit";
    case ErrorKind::singular_approach: return "singular approach";
    case ErrorKind::config: return "config";
  }
  return "error";
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(num, den);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational norm = o.re * o.re + o.im * o.im;
  if (norm == 0) throw std::domain_error("GaussianRational: division by zero");
  Rational r = (re * o.re + im * o.im) / norm;
  im = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  if (z.re == 0) return to_string(z.im) + "i";
  return to_string(z.re) + (z.im > 0 ? "+" : "") + to_string(z.im) + "i";
}

namespace {

bool exact_integer_sqrt(const Integer& v, Integer& root) {
  if (v < 0) return false;
  root = boost::multiprecision::sqrt(v);
  return root * root == v;
}

}  // namespace

Surd::Surd(Rational coefficient, Rational radicand)
    : coefficient_(std::move(coefficient)), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw std::domain_error("Surd: negative radicand");
  normalize();
}

void Surd::normalize() {
  if (coefficient_ == 0 || radicand_ == 0) {
    coefficient_ = 0;
    radicand_ = 1;
    return;
  }
  Integer num_root, den_root;
  if (exact_integer_sqrt(numerator(radicand_), num_root) && exact_integer_sqrt(denominator(radicand_), den_root)) {
    coefficient_ *= Rational(num_root, den_root);
    radicand_ = 1;
  }
}

double Surd::value() const { return to_double(coefficient_) * std::sqrt(to_double(radicand_)); }

Surd operator*(const Surd& a, const Surd& b) {
  return Surd(a.coefficient_ * b.coefficient_, a.radicand_ * b.radicand_);
}

bool operator==(const Surd& a, const Surd& b) {
  const int sa = a.coefficient_.sign();
  const int sb = b.coefficient_.sign();
  return sa == sb && a.square() == b.square();
}

std::string to_string(const Surd& s) {
  if (s.is_rational()) return to_string(s.coefficient());
  return to_string(s.coefficient()) + "*sqrt(" + to_string(s.radicand()) + ")";
}

}  // namespace ffpair

#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffpair {

/// Dense univariate polynomial, ascending powers. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and degree -1.
/// Arithmetic is exact whenever T is.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : coefficients_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : coefficients_(coefficients) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(std::size_t degree, const T& c) {
    std::vector<T> cs(degree + 1, T(0));
    cs[degree] = c;
    return Polynomial(std::move(cs));
  }

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::vector<T>& coefficients() const noexcept { return coefficients_; }

  T operator[](std::size_t k) const { return k < coefficients_.size() ? coefficients_[k] : T(0); }

  template <typename X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coefficients_.size() <= 1) return {};
    std::vector<T> cs(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k) cs[k - 1] = T(static_cast<long>(k)) * coefficients_[k];
    return Polynomial(std::move(cs));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size(), T(0));
    for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] += o.coefficients_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size(), T(0));
    for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] -= o.coefficients_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coefficients_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> cs(a.coefficients_.size() + b.coefficients_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) cs[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(cs));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coefficients_ == b.coefficients_; }

  // First `count` Taylor coefficients at 0 of this / denominator.
  std::vector<T> series_quotient(const Polynomial& denominator, std::size_t count) const {
    if (denominator[0] == T(0)) throw std::domain_error("series_quotient: denominator vanishes at 0");
    std::vector<T> out(count, T(0));
    for (std::size_t k = 0; k < count; ++k) {
      T acc = (*this)[k];
      for (std::size_t i = 1; i <= k; ++i) acc -= denominator[i] * out[k - i];
      out[k] = acc / denominator[0];
    }
    return out;
  }

  template <typename U, typename Convert>
  Polynomial<U> map(Convert convert) const {
    std::vector<U> cs;
    cs.reserve(coefficients_.size());
    for (const auto& c : coefficients_) cs.push_back(convert(c));
    return Polynomial<U>(std::move(cs));
  }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == T(0)) coefficients_.pop_back();
  }

  std::vector<T> coefficients_;
};

template <typename T>
struct RationalFunction {
  Polynomial<T> numerator;
  Polynomial<T> denominator;

  std::vector<T> series_at_origin(std::size_t count) const { return numerator.series_quotient(denominator, count); }
};

}  // namespace ffpair

#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "ffpair/error.hpp"
#include "ffpair/matrix.hpp"
#include "ffpair/polynomial.hpp"
#include "ffpair/potential.hpp"
#include "ffpair/rational.hpp"

namespace ffpair {

using RadialFunction = std::function<Complex(double)>;

// A test function with its analytic first and second derivatives in r.
struct SmoothFunction {
  RadialFunction value;
  RadialFunction first;
  RadialFunction second;
};

/// psi_+ = psi_1 + psi_4, psi_- = psi_1 - psi_4, psi_0 = psi_2 (= -psi_3).
struct ComponentBundle {
  std::vector<double> grid;
  std::vector<Complex> plus;
  std::vector<Complex> minus;
  std::vector<Complex> zero;
  double symmetry_defect = 0.0;  // max |psi_2 + psi_3|
};

ComponentBundle combine_components(std::span<const double> grid, std::span<const Complex> psi1,
                                   std::span<const Complex> psi2, std::span<const Complex> psi3,
                                   std::span<const Complex> psi4, double tolerance);

// Residuals of the coupled first-order set on a uniform grid:
//   R1 = phi psi_+ - m~ psi_- + 4 psi_0'
//   R2 = phi psi_- - m~ psi_+
//   R3 = phi psi_0 - psi_+'
// Derivatives use fourth-order grid stencils.
struct EsResiduals {
  std::vector<Complex> first;
  std::vector<Complex> second;
  std::vector<Complex> third;
};

EsResiduals es_residuals(const ComponentBundle& bundle, std::span<const Complex> phi, double m_tilde);

template <typename T>
struct OdeCoefficients {
  T second;
  T first;
  T zeroth;
};

/// phi psi'' - phi' psi' + (phi^3 - m~^2 phi)/4 psi = 0 in r.
class RadialOde {
 public:
  RadialOde(RadialFunction phi, RadialFunction phi_derivative, double m_tilde);

  OdeCoefficients<Complex> coefficients(double r) const;
  Complex residual(double r, Complex psi, Complex dpsi, Complex d2psi) const;
  Complex residual(double r, const SmoothFunction& psi) const;

  const RadialFunction& phi() const noexcept { return phi_; }
  const RadialFunction& phi_derivative() const noexcept { return dphi_; }
  double m_tilde() const noexcept { return m_tilde_; }

 private:
  RadialFunction phi_;
  RadialFunction dphi_;
  double m_tilde_;
};

RadialOde second_order_coefficients(RadialFunction phi, RadialFunction phi_derivative, double m_tilde);
// Exponential potential with the analytic phi' = (A / lambda~) e^{-r/lambda~}.
RadialOde second_order_coefficients(const PairParameters& p, Complex varpi);

/// X[f] = x^2 f'' + x/(1-x) f' + (-a^2 x^2 + 2 a^2 x - b^2)/4 f = 0.
/// Coefficients are held as rational functions of x so that their behaviour
/// at the regular singular point x = 0 can be read off exactly.
template <typename T>
class XDomainOde {
 public:
  XDomainOde(T alpha, T beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    const T a2 = alpha_ * alpha_;
    const T quarter = T(1) / T(4);
    second_ = {Polynomial<T>{T(0), T(0), T(1)}, Polynomial<T>{T(1)}};
    first_ = {Polynomial<T>{T(0), T(1)}, Polynomial<T>{T(1), T(-1)}};
    zeroth_ = {Polynomial<T>{-beta_ * beta_ * quarter, T(2) * a2 * quarter, -a2 * quarter}, Polynomial<T>{T(1)}};
  }

  const T& alpha() const noexcept { return alpha_; }
  const T& beta() const noexcept { return beta_; }

  OdeCoefficients<T> coefficients(const T& x) const {
    if (x == T(1)) throw Error(ErrorKind::regular_singular_point, "x-domain ODE evaluated at x = 1");
    return {eval(second_, x), eval(first_, x), eval(zeroth_, x)};
  }

  T residual(const T& x, const T& f, const T& fx, const T& fxx) const {
    const auto c = coefficients(x);
    return c.second * fxx + c.first * fx + c.zeroth * f;
  }

  // Taylor coefficients at x = 0 of the (second, first, zeroth) coefficients.
  std::array<std::vector<T>, 3> series_at_origin(std::size_t count) const {
    return {second_.series_at_origin(count), first_.series_at_origin(count), zeroth_.series_at_origin(count)};
  }

 private:
  static T eval(const RationalFunction<T>& f, const T& x) { return f.numerator(x) / f.denominator(x); }

  T alpha_;
  T beta_;
  RationalFunction<T> second_;
  RationalFunction<T> first_;
  RationalFunction<T> zeroth_;
};

XDomainOde<Complex> x_domain_ode(const ModeParameters& mode);
XDomainOde<Rational> x_domain_ode(const Rational& alpha, const Rational& beta);

/// Checks L[psi] = (phi^2 / 4) R1[psi] where psi_- and psi_0 are defined by
/// R2 = R3 = 0. L uses the analytic derivatives of psi; psi_0' is taken with
/// a five-point stencil of step h, so the deviation measures stencil error.
struct EliminationCheck {
  double max_deviation = 0.0;
  double scale = 0.0;  // largest single term of L[psi] over the grid
  double bound = 0.0;

  bool within_bound() const noexcept { return max_deviation <= bound; }
};

inline constexpr double kEliminationStencilStep = 1e-3;

// Documented bound for the h = 1e-3 stencil on O(1) smooth inputs.
inline double elimination_stencil_bound(double scale) { return 1e-9 * (scale > 1.0 ? scale : 1.0); }

EliminationCheck elimination_identity_check(const SmoothFunction& psi, const RadialFunction& phi,
                                            const RadialFunction& phi_derivative, double m_tilde,
                                            std::span<const double> grid, double step = kEliminationStencilStep);

}  // namespace ffpair

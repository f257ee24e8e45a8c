#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ffpair/matrix.hpp"
#include "ffpair/polynomial.hpp"
#include "ffpair/potential.hpp"
#include "ffpair/rational.hpp"
#include "ffpair/recurrence.hpp"

namespace ffpair {

using PolynomialQ = Polynomial<Rational>;
using PolynomialC = Polynomial<Complex>;

PolynomialC to_complex(const PolynomialQ& p);

/// Residual polynomial of
///   x(1-x) H'' + [a x^2 - (b+a) x + (b+1)] H' + (1/2)[a(b-a) x + z] H.
template <typename T>
Polynomial<T> h_equation_residual(const Polynomial<T>& h, const T& alpha, const T& beta, const T& zeta) {
  const Polynomial<T> x_one_minus_x{T(0), T(1), T(-1)};
  const Polynomial<T> first{beta + T(1), -(beta + alpha), alpha};
  const Polynomial<T> zeroth{zeta / T(2), alpha * (beta - alpha) / T(2)};
  const auto dh = h.derivative();
  return x_one_minus_x * dh.derivative() + first * dh + zeroth * h;
}

/// H(x) of degree n+1 at the quantized parameters, C_0 = 1.
PolynomialQ assemble_polynomial(int n);

/// Exact residual of H in its own equation.
PolynomialQ h_residual(int n);

struct Monomial {
  int degree = -1;
  Rational coefficient;
};

// The polynomial's only term, or nothing if it has zero or several terms.
std::optional<Monomial> single_monomial(const PolynomialQ& p);

/// psi_+(x) = x^{beta/2} e^{-alpha x/2} H(x) (N = 1, principal branch) and
/// its first two x-derivatives.
class ClosedFormMode {
 public:
  ClosedFormMode(PolynomialC h, Complex alpha, Complex beta);
  static ClosedFormMode quantized(int n);

  Complex prefactor(Complex x) const;
  Complex value(Complex x) const;
  Complex first(Complex x) const;
  Complex second(Complex x) const;

  const PolynomialC& polynomial() const noexcept { return h_; }
  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }

 private:
  void check_sample(Complex x) const;

  PolynomialC h_;
  Complex alpha_;
  Complex beta_;
};

struct WavefunctionProfile {
  int n = 0;
  ModeParameters mode;
  std::vector<Complex> x;
  std::vector<Complex> psi_plus;
  std::vector<Complex> psi_minus;
  std::vector<Complex> psi_zero;
  std::vector<Complex> dpsi_plus_dx;
};

WavefunctionProfile assemble_psi_plus(int n, std::span<const Complex> xs);

// psi_- = m~ psi_+ / phi and psi_0 = (d psi_+/dr) / phi with phi = varpi (1 - x).
WavefunctionProfile reconstruct_components(const WavefunctionProfile& profile, const PairParameters& p,
                                           Complex varpi);

}  // namespace ffpair

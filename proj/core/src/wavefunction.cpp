#include "ffpair/wavefunction.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace ffpair {

PolynomialC to_complex(const PolynomialQ& p) {
  return p.map<Complex>([](const Rational& q) { return Complex(to_double(q)); });
}

PolynomialQ assemble_polynomial(int n) {
  const auto t = truncation_parameters(n);
  const auto nn = static_cast<std::size_t>(n);
  const auto series = generate_series(t.alpha, t.beta, t.zeta(), nn + 2);
  const auto& c = series.coefficients;
  if (c[nn + 2] != 0)
    throw Error(ErrorKind::invalid_argument, "C_" + std::to_string(n + 2) + " = " + to_string(c[nn + 2]) +
                                                 " does not vanish at the quantized parameters");
  PolynomialQ h(std::vector<Rational>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(nn + 2)));
  if (h.degree() != n + 1)
    throw Error(ErrorKind::invalid_argument, "C_" + std::to_string(n + 1) + " vanishes; H has degree " +
                                                 std::to_string(h.degree()));
  return h;
}

PolynomialQ h_residual(int n) {
  const auto t = truncation_parameters(n);
  return h_equation_residual(assemble_polynomial(n), t.alpha, t.beta, t.zeta());
}

std::optional<Monomial> single_monomial(const PolynomialQ& p) {
  std::optional<Monomial> found;
  const auto& cs = p.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    if (found) return std::nullopt;
    found = Monomial{static_cast<int>(k), cs[k]};
  }
  return found;
}

ClosedFormMode::ClosedFormMode(PolynomialC h, Complex alpha, Complex beta)
    : h_(std::move(h)), alpha_(alpha), beta_(beta) {}

ClosedFormMode ClosedFormMode::quantized(int n) {
  const auto t = truncation_parameters(n);
  return {to_complex(assemble_polynomial(n)), Complex(to_double(t.alpha)), Complex(to_double(t.beta))};
}

void ClosedFormMode::check_sample(Complex x) const {
  if (x == Complex(0.0)) {
    std::ostringstream msg;
    msg << "x = 0 is singular for beta = " << beta_;
    throw Error(ErrorKind::singular_sample, msg.str());
  }
}

Complex ClosedFormMode::prefactor(Complex x) const {
  if (x == Complex(0.0)) {
    if (beta_.real() < 0.0) check_sample(x);
    return beta_ == Complex(0.0) ? Complex(1.0) : Complex(0.0);
  }
  return std::pow(x, 0.5 * beta_) * std::exp(-0.5 * alpha_ * x);
}

Complex ClosedFormMode::value(Complex x) const { return prefactor(x) * h_(x); }

Complex ClosedFormMode::first(Complex x) const {
  check_sample(x);
  const Complex g = 0.5 * beta_ / x - 0.5 * alpha_;
  return prefactor(x) * (h_.derivative()(x) + g * h_(x));
}

Complex ClosedFormMode::second(Complex x) const {
  check_sample(x);
  const Complex g = 0.5 * beta_ / x - 0.5 * alpha_;
  const Complex dg = -0.5 * beta_ / (x * x);
  const auto dh = h_.derivative();
  return prefactor(x) * (dh.derivative()(x) + 2.0 * g * dh(x) + (g * g + dg) * h_(x));
}

WavefunctionProfile assemble_psi_plus(int n, std::span<const Complex> xs) {
  const auto closed = ClosedFormMode::quantized(n);
  WavefunctionProfile profile;
  profile.n = n;
  profile.mode = ModeParameters::from_symbols(closed.alpha(), closed.beta());
  profile.x.assign(xs.begin(), xs.end());
  profile.psi_plus.reserve(xs.size());
  profile.dpsi_plus_dx.reserve(xs.size());
  for (const Complex x : xs) {
    profile.psi_plus.push_back(closed.value(x));
    profile.dpsi_plus_dx.push_back(closed.first(x));
  }
  return profile;
}

WavefunctionProfile reconstruct_components(const WavefunctionProfile& profile, const PairParameters& p,
                                           Complex varpi) {
  WavefunctionProfile out = profile;
  out.mode = mode_parameters(p, varpi, profile.mode.branch);
  out.psi_minus.clear();
  out.psi_zero.clear();
  const double m_tilde = p.m_tilde();
  const double range = p.lambda_tilde();
  for (std::size_t i = 0; i < profile.x.size(); ++i) {
    const Complex x = profile.x[i];
    const Complex phi = varpi * (1.0 - x);
    if (phi == Complex(0.0)) {
      std::ostringstream msg;
      msg << "phi = 0 at sample " << i << " (x = " << x << ")";
      throw Error(ErrorKind::singular_point, msg.str());
    }
    const Complex dpsi_dr = -(x / range) * profile.dpsi_plus_dx[i];
    out.psi_minus.push_back(m_tilde * profile.psi_plus[i] / phi);
    out.psi_zero.push_back(dpsi_dr / phi);
  }
  return out;
}

}  // namespace ffpair

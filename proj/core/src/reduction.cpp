#include "ffpair/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ffpair/stencil.hpp"

namespace ffpair {

namespace {

void require_same_size(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw Error(ErrorKind::invalid_argument,
                std::string(what) + " has " + std::to_string(got) + " samples, grid has " + std::to_string(expected));
}

double uniform_spacing(std::span<const double> grid) {
  if (grid.size() < 5) throw Error(ErrorKind::invalid_argument, "need at least 5 grid points for the stencils");
  const double h = grid[1] - grid[0];
  if (!(h > 0.0)) throw Error(ErrorKind::invalid_argument, "grid must be increasing");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (std::abs((grid[i] - grid[i - 1]) - h) > 1e-9 * h)
      throw Error(ErrorKind::invalid_argument, "grid must be uniform");
  return h;
}

constexpr double kSingularPhi = 1e-12;

}  // namespace

ComponentBundle combine_components(std::span<const double> grid, std::span<const Complex> psi1,
                                   std::span<const Complex> psi2, std::span<const Complex> psi3,
                                   std::span<const Complex> psi4, double tolerance) {
  require_same_size(grid.size(), psi1.size(), "psi_1");
  require_same_size(grid.size(), psi2.size(), "psi_2");
  require_same_size(grid.size(), psi3.size(), "psi_3");
  require_same_size(grid.size(), psi4.size(), "psi_4");

  ComponentBundle bundle;
  bundle.grid.assign(grid.begin(), grid.end());
  bundle.plus.reserve(grid.size());
  bundle.minus.reserve(grid.size());
  bundle.zero.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bundle.symmetry_defect = std::max(bundle.symmetry_defect, std::abs(psi2[i] + psi3[i]));
    bundle.plus.push_back(psi1[i] + psi4[i]);
    bundle.minus.push_back(psi1[i] - psi4[i]);
    bundle.zero.push_back(psi2[i]);
  }
  if (bundle.symmetry_defect > tolerance)
    throw Error(ErrorKind::inconsistent_bundle,
                "|psi_2 + psi_3| reaches " + std::to_string(bundle.symmetry_defect) + " (tolerance " +
                    std::to_string(tolerance) + ")");
  return bundle;
}

EsResiduals es_residuals(const ComponentBundle& bundle, std::span<const Complex> phi, double m_tilde) {
  const std::size_t n = bundle.grid.size();
  require_same_size(n, phi.size(), "phi");
  require_same_size(n, bundle.plus.size(), "psi_+");
  require_same_size(n, bundle.minus.size(), "psi_-");
  require_same_size(n, bundle.zero.size(), "psi_0");
  const double h = uniform_spacing(bundle.grid);

  const auto dplus = stencil::grid_first_derivative(bundle.plus, h);
  const auto dzero = stencil::grid_first_derivative(bundle.zero, h);

  EsResiduals out;
  out.first.resize(n);
  out.second.resize(n);
  out.third.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.first[i] = phi[i] * bundle.plus[i] - m_tilde * bundle.minus[i] + 4.0 * dzero[i];
    out.second[i] = phi[i] * bundle.minus[i] - m_tilde * bundle.plus[i];
    out.third[i] = phi[i] * bundle.zero[i] - dplus[i];
  }
  return out;
}

RadialOde::RadialOde(RadialFunction phi, RadialFunction phi_derivative, double m_tilde)
    : phi_(std::move(phi)), dphi_(std::move(phi_derivative)), m_tilde_(m_tilde) {}

OdeCoefficients<Complex> RadialOde::coefficients(double r) const {
  const Complex f = phi_(r);
  return {f, -dphi_(r), 0.25 * (f * f * f - m_tilde_ * m_tilde_ * f)};
}

Complex RadialOde::residual(double r, Complex psi, Complex dpsi, Complex d2psi) const {
  const auto c = coefficients(r);
  return c.second * d2psi + c.first * dpsi + c.zeroth * psi;
}

Complex RadialOde::residual(double r, const SmoothFunction& psi) const {
  return residual(r, psi.value(r), psi.first(r), psi.second(r));
}

RadialOde second_order_coefficients(RadialFunction phi, RadialFunction phi_derivative, double m_tilde) {
  return RadialOde(std::move(phi), std::move(phi_derivative), m_tilde);
}

RadialOde second_order_coefficients(const PairParameters& p, Complex varpi) {
  return RadialOde([p, varpi](double r) { return phi_value(p, varpi, r); },
                   [p](double r) { return Complex(phi_derivative(p, r)); }, p.m_tilde());
}

XDomainOde<Complex> x_domain_ode(const ModeParameters& mode) { return {mode.alpha, mode.beta}; }

XDomainOde<Rational> x_domain_ode(const Rational& alpha, const Rational& beta) { return {alpha, beta}; }

EliminationCheck elimination_identity_check(const SmoothFunction& psi, const RadialFunction& phi,
                                            const RadialFunction& phi_derivative, double m_tilde,
                                            std::span<const double> grid, double step) {
  const RadialOde ode(phi, phi_derivative, m_tilde);

  auto psi_zero = [&](double s) {
    const Complex f = phi(s);
    if (std::abs(f) < kSingularPhi)
      throw Error(ErrorKind::singular_point, "phi vanishes at r = " + std::to_string(s));
    return psi.first(s) / f;
  };

  EliminationCheck check;
  for (double r : grid) {
    const Complex f = phi(r);
    if (std::abs(f) < kSingularPhi)
      throw Error(ErrorKind::singular_point, "phi vanishes at r = " + std::to_string(r));
    const Complex p = psi.value(r);
    const Complex dp = psi.first(r);
    const Complex d2p = psi.second(r);

    const Complex psi_minus = m_tilde * p / f;
    const Complex dzero = stencil::first_derivative(psi_zero, r, step);
    const Complex r1 = f * p - m_tilde * psi_minus + 4.0 * dzero;
    const Complex lhs = ode.residual(r, p, dp, d2p);

    check.max_deviation = std::max(check.max_deviation, std::abs(lhs - 0.25 * f * f * r1));
    const double terms = std::max({std::abs(f * d2p), std::abs(phi_derivative(r) * dp),
                                   std::abs(0.25 * f * f * f * p), std::abs(0.25 * m_tilde * m_tilde * f * p)});
    check.scale = std::max(check.scale, terms);
  }
  check.bound = elimination_stencil_bound(check.scale);
  return check;
}

}  // namespace ffpair

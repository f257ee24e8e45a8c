#include "ffpair/potential.hpp"

#include <cmath>
#include <limits>

#include "ffpair/error.hpp"

namespace ffpair {

UnitSystem::UnitSystem(UnitMode mode, double speed, double vacuum_speed, double hbar, double c_over_vf)
    : mode_(mode), speed_(speed), vacuum_speed_(vacuum_speed), hbar_(hbar), c_over_vf_(c_over_vf) {
  if (!(speed_ > 0.0) || !(hbar_ > 0.0) || !(vacuum_speed_ > 0.0))
    throw Error(ErrorKind::invalid_argument, "unit system needs positive speed and hbar");
}

UnitSystem UnitSystem::natural() { return {UnitMode::natural, 1.0, 1.0, 1.0, 1.0}; }

UnitSystem UnitSystem::si(const PhysicalConstants& constants) {
  return {UnitMode::si, constants.speed_of_light, constants.speed_of_light, constants.reduced_planck, 1.0};
}

UnitSystem UnitSystem::fermi(const UnitSystem& base, double c_over_vf) {
  if (!(c_over_vf > 0.0)) throw Error(ErrorKind::invalid_argument, "c / v_F must be positive");
  return {UnitMode::fermi, base.vacuum_speed() / c_over_vf, base.vacuum_speed(), base.hbar(), c_over_vf};
}

PairParameters PairParameters::from_compton(double lambda, double d, double strength) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::invalid_argument, "Compton wavelength must be positive");
  if (!(d > 0.0)) throw Error(ErrorKind::invalid_argument, "range scale d must be positive");
  if (!(strength >= 0.0)) throw Error(ErrorKind::invalid_argument, "potential strength A must be >= 0");
  return PairParameters{lambda, d, strength, 0};
}

PairParameters PairParameters::from_mass(double mass, const UnitSystem& units, double d, double strength) {
  if (!(mass > 0.0)) throw Error(ErrorKind::invalid_argument, "mass must be positive");
  return from_compton(units.hbar() / (mass * units.speed()), d, strength);
}

ModeParameters ModeParameters::from_symbols(Complex alpha, Complex beta) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const BetaBranch branch = beta.real() < 0.0 ? BetaBranch::negative : BetaBranch::positive;
  return {Complex(nan, nan), alpha, beta, branch, (1.0 - alpha) * (beta - alpha)};
}

double potential_value(const PairParameters& p, double r) {
  if (r < 0.0) throw Error(ErrorKind::invalid_argument, "radius must be >= 0");
  return p.strength * std::exp(-r / p.lambda_tilde());
}

Complex phi_value(const PairParameters& p, Complex varpi, double r) { return varpi - potential_value(p, r); }

double phi_derivative(const PairParameters& p, double r) {
  return potential_value(p, r) / p.lambda_tilde();
}

Complex x_of_r(const PairParameters& p, Complex varpi, double r) {
  if (varpi == Complex(0.0)) throw Error(ErrorKind::degenerate_frequency, "varpi = 0 has no x coordinate");
  return potential_value(p, r) / varpi;
}

Complex r_of_x(const PairParameters& p, Complex varpi, Complex x) {
  if (varpi == Complex(0.0)) throw Error(ErrorKind::degenerate_frequency, "varpi = 0 has no x coordinate");
  if (x == Complex(0.0)) throw Error(ErrorKind::infinite_radius, "x = 0 corresponds to r -> infinity");
  if (p.strength == 0.0) throw Error(ErrorKind::invalid_argument, "A = 0 makes x identically zero");
  return -p.lambda_tilde() * std::log(varpi * x / p.strength);
}

ModeParameters mode_parameters(const PairParameters& p, Complex varpi, BetaBranch branch) {
  if (!(p.d > 0.0)) throw Error(ErrorKind::invalid_argument, "range scale d must be positive");
  const Complex i{0.0, 1.0};
  const Complex alpha = i * p.lambda_tilde() * varpi;
  const Complex root = std::sqrt(4.0 * p.d * p.d + alpha * alpha);
  const Complex beta = static_cast<double>(static_cast<int>(branch)) * root;
  return {varpi, alpha, beta, branch, (1.0 - alpha) * (beta - alpha)};
}

}  // namespace ffpair

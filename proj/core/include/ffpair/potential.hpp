#pragma once

#include <complex>

#include "ffpair/config.hpp"
#include "ffpair/matrix.hpp"

namespace ffpair {

enum class UnitMode { natural, si, fermi };

/// Speed and action scales. In fermi mode the stored speed is v_F and every
/// formula that would use c uses it instead.
class UnitSystem {
 public:
  static UnitSystem natural();
  static UnitSystem si(const PhysicalConstants& constants);
  static UnitSystem fermi(const UnitSystem& base, double c_over_vf);

  UnitMode mode() const noexcept { return mode_; }
  double speed() const noexcept { return speed_; }
  double vacuum_speed() const noexcept { return vacuum_speed_; }
  double hbar() const noexcept { return hbar_; }
  // c / v_F as given; 1 outside fermi mode.
  double c_over_vf() const noexcept { return c_over_vf_; }

 private:
  UnitSystem(UnitMode mode, double speed, double vacuum_speed, double hbar, double c_over_vf);

  UnitMode mode_;
  double speed_;
  double vacuum_speed_;
  double hbar_;
  double c_over_vf_;
};

/// Physical inputs for the pair. lambda is the reduced Compton wavelength
/// hbar/(m c); the potential range is lambda * d.
struct PairParameters {
  double lambda = 1.0;
  double d = 1.0;
  double strength = 0.0;  // A, inverse length
  int spin = 0;

  static PairParameters from_compton(double lambda, double d, double strength);
  static PairParameters from_mass(double mass, const UnitSystem& units, double d, double strength);

  double lambda_tilde() const noexcept { return lambda * d; }
  double m_tilde() const noexcept { return 2.0 / lambda; }
  double mass(const UnitSystem& units) const noexcept { return units.hbar() / (lambda * units.speed()); }
};

enum class BetaBranch : int { negative = -1, positive = 1 };

/// ODE-level symbols for one trial frequency varpi = omega / c.
struct ModeParameters {
  Complex varpi;
  Complex alpha;
  Complex beta;
  BetaBranch branch;
  Complex zeta;

  // For ODE-only work where no physical frequency is attached (varpi is NaN).
  static ModeParameters from_symbols(Complex alpha, Complex beta);
};

double potential_value(const PairParameters& p, double r);
Complex phi_value(const PairParameters& p, Complex varpi, double r);
double phi_derivative(const PairParameters& p, double r);

Complex x_of_r(const PairParameters& p, Complex varpi, double r);
Complex r_of_x(const PairParameters& p, Complex varpi, Complex x);

ModeParameters mode_parameters(const PairParameters& p, Complex varpi, BetaBranch branch);

}  // namespace ffpair

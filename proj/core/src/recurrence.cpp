#include "ffpair/recurrence.hpp"

#include <cmath>
#include <string>

namespace ffpair {

TruncationParameters truncation_parameters(int n) {
  if (n == 0) throw Error(ErrorKind::excluded_state, "n = 0 admits no truncated solution");
  if (n < 0) throw Error(ErrorKind::invalid_argument, "overtone number must be >= 1, got " + std::to_string(n));
  TruncationParameters t;
  t.n = n;
  t.alpha = Rational(n * n, n + 2);
  t.beta = t.alpha - 2 * n;
  t.d = Surd(Rational(2 * n), Rational(1, 2 * n + 4));
  return t;
}

QuantizedMode quantized_spectrum(int n, const PairParameters& p, const UnitSystem& units) {
  const auto t = truncation_parameters(n);
  if (!(p.lambda > 0.0)) throw Error(ErrorKind::invalid_argument, "Compton wavelength must be positive");

  QuantizedMode mode;
  mode.n = n;
  mode.alpha_n = t.alpha;
  mode.beta_n = t.beta;
  mode.d_n = t.d;
  mode.im_omega_scaled = Surd(Rational(n), Rational(1, 2 * n + 4));
  mode.tau_scaled = Surd(Rational(1, n), Rational(2 * n + 4));
  mode.lambda = p.lambda;
  mode.speed = units.vacuum_speed();
  mode.hbar = units.hbar();

  mode.im_omega = (mode.speed / mode.lambda) * mode.im_omega_scaled.value();
  mode.omega = Complex(0.0, -mode.im_omega);
  mode.energy_im = -mode.hbar * mode.im_omega;
  mode.tau = (mode.lambda / mode.speed) * mode.tau_scaled.value();

  if (units.mode() == UnitMode::fermi) return fermi_rescale_by_ratio(mode, units.c_over_vf());
  return mode;
}

double decay_time(int n, const PairParameters& p, const UnitSystem& units) {
  return quantized_spectrum(n, p, units).tau;
}

QuantizedMode fermi_rescale_by_ratio(const QuantizedMode& mode, double c_over_vf) {
  if (!(c_over_vf > 0.0)) throw Error(ErrorKind::invalid_argument, "c / v_F must be positive");
  QuantizedMode out = mode;
  out.speed = mode.speed / c_over_vf;
  out.tau = mode.tau * c_over_vf;
  out.im_omega = mode.im_omega / c_over_vf;
  out.omega = Complex(0.0, -out.im_omega);
  out.energy_im = mode.energy_im / c_over_vf;
  return out;
}

QuantizedMode fermi_rescale(const QuantizedMode& mode, double fermi_velocity) {
  if (!(fermi_velocity > 0.0)) throw Error(ErrorKind::invalid_argument, "v_F must be positive");
  return fermi_rescale_by_ratio(mode, mode.speed / fermi_velocity);
}

PairParameters quantized_pair(int n, double lambda, double strength) {
  return PairParameters::from_compton(lambda, truncation_parameters(n).d.value(), strength);
}

Complex quantized_varpi(int n, double lambda) {
  const auto t = truncation_parameters(n);
  return Complex(0.0, -to_double(t.alpha) / (lambda * t.d.value()));
}

ModeParameters quantized_mode_parameters(int n, double lambda, double strength) {
  return mode_parameters(quantized_pair(n, lambda, strength), quantized_varpi(n, lambda), BetaBranch::negative);
}

}  // namespace ffpair

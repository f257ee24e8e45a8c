#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ffpair/error.hpp"
#include "ffpair/matrix.hpp"
#include "ffpair/potential.hpp"
#include "ffpair/rational.hpp"

namespace ffpair {

/// One row of the three-term recursion
///   C_{j+2} A_j + C_{j+1} B_j + C_j D_j = 0
/// with
///   A_j = (j+1)(j+2) + (j+2)(beta+1)
///   B_j = zeta/2 - j(j+1) - (j+1)(beta+alpha)
///   D_j = alpha j + (alpha/2)(beta-alpha)
template <typename T>
struct RecurrenceRow {
  std::size_t j = 0;
  T a;
  T b;
  T d;

  T apply(const T& c_j, const T& c_j1, const T& c_j2) const { return c_j2 * a + c_j1 * b + c_j * d; }
};

template <typename T>
RecurrenceRow<T> row_coefficients(std::size_t j, const T& alpha, const T& beta, const T& zeta) {
  const T jj(static_cast<long>(j));
  const T one(1);
  const T two(2);
  RecurrenceRow<T> row;
  row.j = j;
  row.a = (jj + one) * (jj + two) + (jj + two) * (beta + one);
  row.b = zeta / two - jj * (jj + one) - (jj + one) * (beta + alpha);
  row.d = alpha * jj + alpha / two * (beta - alpha);
  return row;
}

template <typename T>
T zeta_of(const T& alpha, const T& beta) {
  return (T(1) - alpha) * (beta - alpha);
}

template <typename T>
T c1_from_c0(const T& alpha, const T& beta, const T& zeta) {
  (void)alpha;
  if (beta + T(1) == T(0)) throw Error(ErrorKind::indicial_degeneracy, "beta = -1 makes C_1 undefined");
  return -zeta / (T(2) * (beta + T(1)));
}

/// Frobenius coefficients with sigma = 0 and C_0 = 1.
template <typename T>
struct SeriesSolution {
  std::vector<T> coefficients;
  int sigma = 0;
  // Set when two consecutive stored coefficients vanish: the recursion then
  // keeps every later coefficient at zero and H is a polynomial.
  std::optional<std::size_t> truncation_degree;
};

template <typename T>
SeriesSolution<T> generate_series(const T& alpha, const T& beta, const T& zeta, std::size_t jmax) {
  if (jmax < 2) throw Error(ErrorKind::invalid_argument, "generate_series needs jmax >= 2");
  SeriesSolution<T> s;
  s.coefficients.reserve(jmax + 1);
  s.coefficients.push_back(T(1));
  s.coefficients.push_back(c1_from_c0(alpha, beta, zeta));
  for (std::size_t j = 0; j + 2 <= jmax; ++j) {
    const auto row = row_coefficients(j, alpha, beta, zeta);
    if (row.a == T(0))
      throw SingularRowError(j, "A_" + std::to_string(j) + " = 0; C_" + std::to_string(j + 2) +
                                    " is not determined by the recursion");
    const T& cj = s.coefficients[j];
    const T& cj1 = s.coefficients[j + 1];
    s.coefficients.push_back(-(cj1 * row.b + cj * row.d) / row.a);
  }
  for (std::size_t k = 1; k + 1 < s.coefficients.size(); ++k) {
    if (s.coefficients[k] == T(0) && s.coefficients[k + 1] == T(0)) {
      s.truncation_degree = k - 1;
      break;
    }
  }
  return s;
}

/// Quantized symbols for overtone n >= 1:
///   alpha_n = n^2/(n+2), beta_n = alpha_n - 2n, d_n = 2n / sqrt(2n+4).
struct TruncationParameters {
  int n = 0;
  Rational alpha;
  Rational beta;
  Surd d;

  Rational zeta() const { return zeta_of(alpha, beta); }
  Rational d_squared() const { return d.square(); }
};

TruncationParameters truncation_parameters(int n);

/// One closed-form damped mode. im_omega is the real positive value of
/// i*omega_n and omega = -i * im_omega. The *_scaled surds are exact in units
/// of c/lambda and lambda/c.
struct QuantizedMode {
  int n = 0;
  Rational alpha_n;
  Rational beta_n;
  Surd d_n;
  Surd im_omega_scaled;  // n / sqrt(2n+4)
  Surd tau_scaled;       // sqrt(2n+4) / n

  double lambda = 1.0;
  double speed = 1.0;
  double hbar = 1.0;

  double im_omega = 0.0;
  Complex omega;
  double energy_im = 0.0;  // Im(hbar omega_n)
  double tau = 0.0;

  friend bool operator==(const QuantizedMode&, const QuantizedMode&) = default;
};

// Only p.lambda enters; d is fixed to d_n and A drops out.
QuantizedMode quantized_spectrum(int n, const PairParameters& p, const UnitSystem& units);
double decay_time(int n, const PairParameters& p, const UnitSystem& units);

// Replace the propagation speed stored in the mode by v_F: times scale by
// speed / v_F, frequencies and energies by v_F / speed.
QuantizedMode fermi_rescale(const QuantizedMode& mode, double fermi_velocity);
QuantizedMode fermi_rescale_by_ratio(const QuantizedMode& mode, double c_over_vf);

// Pair with d = d_n and the quantized frequency varpi = -i alpha_n / (lambda d_n).
PairParameters quantized_pair(int n, double lambda, double strength);
Complex quantized_varpi(int n, double lambda);
ModeParameters quantized_mode_parameters(int n, double lambda, double strength);

}  // namespace ffpair

#pragma once

#include <array>
#include <functional>

#include "ffpair/matrix.hpp"
#include "ffpair/rational.hpp"

namespace ffpair {

template <typename T>
T imaginary_unit();
template <>
inline Complex imaginary_unit<Complex>() {
  return {0.0, 1.0};
}
template <>
inline GaussianRational imaginary_unit<GaussianRational>() {
  return GaussianRational::i();
}

template <typename T>
struct Pauli {
  static SquareMatrix<T, 2> identity() { return SquareMatrix<T, 2>::identity(); }
  static SquareMatrix<T, 2> x() {
    SquareMatrix<T, 2> m;
    m(0, 1) = T(1);
    m(1, 0) = T(1);
    return m;
  }
  static SquareMatrix<T, 2> y() {
    SquareMatrix<T, 2> m;
    m(0, 1) = -imaginary_unit<T>();
    m(1, 0) = imaginary_unit<T>();
    return m;
  }
  static SquareMatrix<T, 2> z() { return SquareMatrix<T, 2>::diagonal({T(1), T(-1)}); }
};

// Ordered (t, x, y), or (0, 1, 2) for the flat set.
template <typename T>
using GammaSet = std::array<SquareMatrix<T, 2>, 3>;

/// Metric data for ds^2 = c^2 dt^2 - dx^2 - dy^2. Everything is diagonal,
/// so only the diagonals are stored. The tetrad is diag(c, 1, 1) and its
/// inverse diag(1/c, 1, 1).
template <typename T>
struct MetricSignature {
  T speed;
  std::array<T, 3> covariant;
  std::array<T, 3> contravariant;
  std::array<T, 3> flat;

  static MetricSignature minkowski() { return for_speed(T(1)); }

  static MetricSignature for_speed(const T& c) {
    const T one(1);
    return MetricSignature{c, {c * c, T(-1), T(-1)}, {one / (c * c), T(-1), T(-1)}, {one, T(-1), T(-1)}};
  }

  std::array<T, 3> tetrad() const { return {speed, T(1), T(1)}; }
  std::array<T, 3> inverse_tetrad() const { return {T(1) / speed, T(1), T(1)}; }

  bool consistent() const {
    for (std::size_t mu = 0; mu < 3; ++mu)
      if (!(covariant[mu] * contravariant[mu] == T(1))) return false;
    const auto e = tetrad();
    for (std::size_t mu = 0; mu < 3; ++mu)
      if (!(e[mu] * e[mu] * flat[mu] == covariant[mu])) return false;
    return true;
  }
};

/// sigma_z, i sigma_x, i sigma_y: the flat set for signature (+,-,-).
template <typename T>
GammaSet<T> flat_gammas() {
  const T i = imaginary_unit<T>();
  return {Pauli<T>::z(), i * Pauli<T>::x(), i * Pauli<T>::y()};
}

/// gamma^mu = e^mu_a gammabar^a with the diagonal inverse tetrad.
template <typename T>
GammaSet<T> generalized_gammas(const MetricSignature<T>& metric) {
  const auto flat = flat_gammas<T>();
  const auto inv = metric.inverse_tetrad();
  return {inv[0] * flat[0], inv[1] * flat[1], inv[2] * flat[2]};
}

GammaSet<Complex> build_flat_gammas();
GammaSet<Complex> build_generalized_gammas(double c);
GammaSet<GaussianRational> build_generalized_gammas(const Rational& c);

// {gamma^mu, gamma^nu} == 2 g^{mu nu} I for all index pairs. Exact for
// Gaussian-rational entries; 1e-14 absolute for complex doubles.
bool clifford_check(const GammaSet<Complex>& gammas, const MetricSignature<double>& metric,
                    double tolerance = 1e-14);
bool clifford_check(const GammaSet<GaussianRational>& gammas, const MetricSignature<Rational>& metric);

/// Structure of the 4x4 radial operator acting on (psi_1..psi_4):
///
///   diag(phi - m~, phi, phi, phi + m~) + L * D^- + R * D^+
///
/// with D^-+ = d/dr_x -+ i d/dr_y. L and R hold the constant +-1 couplings.
struct RadialOperatorStructure {
  std::function<Complex(double)> phi;
  Complex m_tilde;
  Matrix4 lowering_coupling;
  Matrix4 raising_coupling;

  std::array<Complex, 4> multiplicative(double r) const;
  Matrix4 multiplicative_matrix(double r) const;
};

RadialOperatorStructure assemble_radial_operator(std::function<Complex(double)> phi, Complex m_tilde);

/// The static-pair operator built directly from Kronecker products of the
/// generalized gammas and normalized by i c (gammabar^0 (x) gammabar^0):
///
///   temporal * (omega - V) + mass * (m c / hbar) + lowering * D^- + raising * D^+
///
/// With this normalization temporal = I / c and mass = diag(-2, 0, 0, 2).
struct TwoBodyReduction {
  Matrix4 temporal;
  Matrix4 mass;
  Matrix4 lowering_coupling;
  Matrix4 raising_coupling;
};

TwoBodyReduction reduce_two_body_operator(double c);

}  // namespace ffpair

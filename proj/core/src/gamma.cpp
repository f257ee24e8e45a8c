#include "ffpair/gamma.hpp"

#include <cmath>

#include "ffpair/error.hpp"

namespace ffpair {

GammaSet<Complex> build_flat_gammas() { return flat_gammas<Complex>(); }

GammaSet<Complex> build_generalized_gammas(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorKind::invalid_argument, "speed c must be positive");
  const auto metric = MetricSignature<double>::for_speed(c);
  const auto flat = flat_gammas<Complex>();
  const auto inv = metric.inverse_tetrad();
  return {Complex(inv[0]) * flat[0], Complex(inv[1]) * flat[1], Complex(inv[2]) * flat[2]};
}

GammaSet<GaussianRational> build_generalized_gammas(const Rational& c) {
  if (c <= 0) throw Error(ErrorKind::invalid_argument, "speed c must be positive");
  const auto metric = MetricSignature<Rational>::for_speed(c);
  const auto flat = flat_gammas<GaussianRational>();
  const auto inv = metric.inverse_tetrad();
  return {GaussianRational(inv[0]) * flat[0], GaussianRational(inv[1]) * flat[1],
          GaussianRational(inv[2]) * flat[2]};
}

bool clifford_check(const GammaSet<Complex>& gammas, const MetricSignature<double>& metric, double tolerance) {
  for (std::size_t mu = 0; mu < 3; ++mu)
    for (std::size_t nu = 0; nu < 3; ++nu) {
      const Matrix2 anti = gammas[mu] * gammas[nu] + gammas[nu] * gammas[mu];
      const double g = mu == nu ? metric.contravariant[mu] : 0.0;
      const Matrix2 expected = Complex(2.0 * g) * Matrix2::identity();
      if (max_abs_difference(anti, expected) > tolerance) return false;
    }
  return true;
}

bool clifford_check(const GammaSet<GaussianRational>& gammas, const MetricSignature<Rational>& metric) {
  for (std::size_t mu = 0; mu < 3; ++mu)
    for (std::size_t nu = 0; nu < 3; ++nu) {
      const ExactMatrix2 anti = gammas[mu] * gammas[nu] + gammas[nu] * gammas[mu];
      const Rational g = mu == nu ? metric.contravariant[mu] : Rational(0);
      if (!(anti == GaussianRational(2 * g) * ExactMatrix2::identity())) return false;
    }
  return true;
}

std::array<Complex, 4> RadialOperatorStructure::multiplicative(double r) const {
  const Complex f = phi(r);
  return {f - m_tilde, f, f, f + m_tilde};
}

Matrix4 RadialOperatorStructure::multiplicative_matrix(double r) const {
  return Matrix4::diagonal(multiplicative(r));
}

RadialOperatorStructure assemble_radial_operator(std::function<Complex(double)> phi, Complex m_tilde) {
  // Rows of the static-pair system on (psi_1, psi_2, psi_3, psi_4):
  //   (phi - m~,  D-,   -D-,   0       )
  //   (-D+,       phi,  0,     -D-     )
  //   (D+,        0,    phi,   D-      )
  //   (0,         D+,   -D+,   phi + m~)
  Matrix4 lowering;
  lowering(0, 1) = 1.0;
  lowering(0, 2) = -1.0;
  lowering(1, 3) = -1.0;
  lowering(2, 3) = 1.0;

  Matrix4 raising;
  raising(1, 0) = -1.0;
  raising(2, 0) = 1.0;
  raising(3, 1) = 1.0;
  raising(3, 2) = -1.0;

  return RadialOperatorStructure{std::move(phi), m_tilde, lowering, raising};
}

TwoBodyReduction reduce_two_body_operator(double c) {
  const auto g = build_generalized_gammas(c);
  const auto flat = build_flat_gammas();
  const Matrix2 id = Matrix2::identity();
  const Complex i{0.0, 1.0};

  const Matrix4 normalizer = (i * c) * kronecker_product(flat[0], flat[0]);

  // Static pair: d/dt acting on e^{-i omega t} gives -i(omega - V); the
  // relative coordinate enters with opposite signs for the two particles.
  const Matrix4 tt = kronecker_product(g[0], g[0]);
  const Matrix4 kx = kronecker_product(g[1], g[0]) - kronecker_product(g[0], g[1]);
  const Matrix4 ky = kronecker_product(g[2], g[0]) - kronecker_product(g[0], g[2]);
  const Matrix4 mass = i * (kronecker_product(id, g[0]) + kronecker_product(g[0], id));

  TwoBodyReduction out;
  out.temporal = normalizer * (-i * tt);
  out.mass = normalizer * mass;
  const Matrix4 nkx = normalizer * kx;
  const Matrix4 nky = normalizer * ky;
  // d/dx = (D- + D+)/2, d/dy = i (D- - D+)/2
  out.lowering_coupling = Complex(0.5) * (nkx + i * nky);
  out.raising_coupling = Complex(0.5) * (nkx - i * nky);
  return out;
}

}  // namespace ffpair

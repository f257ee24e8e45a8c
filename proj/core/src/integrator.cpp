#include "ffpair/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "ffpair/error.hpp"

namespace ffpair {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Vec2 {
  Complex f;
  Complex df;

  Vec2 operator+(const Vec2& o) const { return {f + o.f, df + o.df}; }
  Vec2 operator*(double s) const { return {f * s, df * s}; }
};

}  // namespace

double distance_to_segment(Complex point, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(point - a);
  const double t = std::clamp(((point - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(point - (a + t * ab));
}

void IntegratorConfig::validate() const {
  if (!(relative_tolerance > 0.0 && relative_tolerance < 1.0) ||
      !(absolute_tolerance > 0.0 && absolute_tolerance < 1.0))
    throw Error(ErrorKind::invalid_argument, "integrator tolerances must lie in (0, 1)");
  if (start == end) throw Error(ErrorKind::invalid_argument, "integration segment has zero length");
  if (max_steps == 0) throw Error(ErrorKind::invalid_argument, "max_steps must be positive");
  for (const Complex singular : {Complex(0.0), Complex(1.0)}) {
    const double dist = distance_to_segment(singular, start, end);
    if (dist < singular_margin) {
      std::ostringstream msg;
      msg << "segment " << start << " -> " << end << " passes within " << dist << " of x = " << singular.real();
      throw Error(ErrorKind::singular_approach, msg.str());
    }
  }
}

OdeSolution integrate_x_ode(const XDomainOde<Complex>& ode, const IntegratorConfig& config, OdeState initial,
                            const Forcing& forcing) {
  config.validate();
  const Complex delta = config.end - config.start;

  // y = (f, f') as functions of s in [0, 1], x = start + s * delta.
  auto rhs = [&](double s, const Vec2& y) -> Vec2 {
    const Complex x = config.start + s * delta;
    const auto c = ode.coefficients(x);
    const Complex g = forcing ? forcing(x) : Complex(0.0);
    const Complex f2 = (g - c.first * y.df - c.zeroth * y.f) / c.second;
    return {delta * y.df, delta * f2};
  };

  auto error_norm = [&](const Vec2& y0, const Vec2& y1, const Vec2& err) {
    auto component = [&](Complex a, Complex b, Complex e) {
      const double scale = config.absolute_tolerance + config.relative_tolerance * std::max(std::abs(a), std::abs(b));
      return std::abs(e) / scale;
    };
    return std::max(component(y0.f, y1.f, err.f), component(y0.df, y1.df, err.df));
  };

  OdeSolution sol;
  Vec2 y{initial.value, initial.derivative};
  double s = 0.0;
  double h = 1e-2;
  sol.x.push_back(config.start);
  sol.states.push_back(initial);

  Vec2 k1 = rhs(s, y);
  std::size_t attempts = 0;
  while (s < 1.0) {
    if (++attempts > config.max_steps)
      throw Error(ErrorKind::step_limit, "exceeded " + std::to_string(config.max_steps) + " steps at s = " +
                                             std::to_string(s));
    if (s + h > 1.0) h = 1.0 - s;
    if (h < 1e-14) throw Error(ErrorKind::step_limit, "step size underflow at s = " + std::to_string(s));

    const Vec2 k2 = rhs(s + c2 * h, y + k1 * (h * a21));
    const Vec2 k3 = rhs(s + c3 * h, y + k1 * (h * a31) + k2 * (h * a32));
    const Vec2 k4 = rhs(s + c4 * h, y + k1 * (h * a41) + k2 * (h * a42) + k3 * (h * a43));
    const Vec2 k5 = rhs(s + c5 * h, y + k1 * (h * a51) + k2 * (h * a52) + k3 * (h * a53) + k4 * (h * a54));
    const Vec2 k6 =
        rhs(s + h, y + k1 * (h * a61) + k2 * (h * a62) + k3 * (h * a63) + k4 * (h * a64) + k5 * (h * a65));
    const Vec2 y_new = y + k1 * (h * b1) + k3 * (h * b3) + k4 * (h * b4) + k5 * (h * b5) + k6 * (h * b6);
    const Vec2 k7 = rhs(s + h, y_new);
    const Vec2 err = (k1 * e1 + k3 * e3 + k4 * e4 + k5 * e5 + k6 * e6 + k7 * e7) * h;

    const double norm = error_norm(y, y_new, err);
    const double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    if (norm <= 1.0) {
      s = (1.0 - s - h < 1e-15) ? 1.0 : s + h;
      y = y_new;
      k1 = k7;  // first-same-as-last
      ++sol.accepted_steps;
      sol.x.push_back(s == 1.0 ? config.end : config.start + s * delta);
      sol.states.push_back({y.f, y.df});
    } else {
      ++sol.rejected_steps;
    }
    h *= factor;
  }
  return sol;
}

OdeSolution integrate_x_ode(const ModeParameters& mode, const IntegratorConfig& config, OdeState initial,
                            const Forcing& forcing) {
  return integrate_x_ode(x_domain_ode(mode), config, initial, forcing);
}

}  // namespace ffpair

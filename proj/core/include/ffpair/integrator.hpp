#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ffpair/matrix.hpp"
#include "ffpair/potential.hpp"
#include "ffpair/reduction.hpp"

namespace ffpair {

/// Straight complex segment start -> end and the error controls.
struct IntegratorConfig {
  double relative_tolerance = 1e-10;
  double absolute_tolerance = 1e-12;
  std::size_t max_steps = 200000;
  Complex start{0.5, 0.0};
  Complex end{0.1, 0.0};
  double singular_margin = 1e-6;  // minimum distance of the segment from x = 0 and x = 1

  void validate() const;
};

struct OdeState {
  Complex value;
  Complex derivative;  // d/dx
};

struct OdeSolution {
  std::vector<Complex> x;
  std::vector<OdeState> states;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;

  const OdeState& final_state() const { return states.back(); }
};

// Right-hand side g(x) for the forced problem X[f] = g.
using Forcing = std::function<Complex(Complex)>;

double distance_to_segment(Complex point, Complex a, Complex b);

/// Dormand-Prince 5(4) with embedded error control along the segment,
/// integrating x^2 f'' + x/(1-x) f' + q(x) f = g(x).
OdeSolution integrate_x_ode(const XDomainOde<Complex>& ode, const IntegratorConfig& config, OdeState initial,
                            const Forcing& forcing = {});
OdeSolution integrate_x_ode(const ModeParameters& mode, const IntegratorConfig& config, OdeState initial,
                            const Forcing& forcing = {});

}  // namespace ffpair

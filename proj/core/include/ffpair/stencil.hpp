#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace ffpair::stencil {

// Five-point central differences. Truncation error is h^4/30 * |f^(5)| for
// the first derivative and h^4/90 * |f^(6)| for the second; rounding adds
// roughly 1.5 eps |f| / h and 5 eps |f| / h^2 respectively.
template <typename F, typename X>
auto first_derivative(F&& f, X x, X h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

template <typename F, typename X>
auto second_derivative(F&& f, X x, X h) {
  return (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h * h);
}

// Fourth order on a uniform grid: central inside, one-sided in the two
// points at each end. Needs at least five samples.
inline std::vector<std::complex<double>> grid_first_derivative(std::span<const std::complex<double>> f, double h) {
  const std::size_t n = f.size();
  if (n < 5) throw std::invalid_argument("grid_first_derivative: need at least 5 samples");
  std::vector<std::complex<double>> d(n);
  const double s = 1.0 / (12.0 * h);
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * s;
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * s;
  for (std::size_t i = 2; i + 2 < n; ++i) d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * s;
  d[n - 2] = -(-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]) * s;
  d[n - 1] = -(-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]) * s;
  return d;
}

}  // namespace ffpair::stencil

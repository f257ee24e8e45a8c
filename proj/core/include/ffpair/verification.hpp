#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffpair/integrator.hpp"
#include "ffpair/potential.hpp"
#include "ffpair/reduction.hpp"
#include "ffpair/wavefunction.hpp"

namespace ffpair {

enum class CheckKind { exact, numeric };

std::string_view to_string(CheckKind kind) noexcept;

/// Outcome of one verification check. Exact checks carry no norms and are
/// decided by algebraic equality; numeric checks pass iff sup_norm <= tolerance.
struct ResidualReport {
  std::string id;
  CheckKind kind = CheckKind::exact;
  bool pass = false;
  std::string detail;
  double sup_norm = 0.0;
  double mean_square = 0.0;
  double tolerance = 0.0;
  std::optional<Monomial> monomial;
};

ResidualReport numeric_report(std::string id, const std::vector<double>& deviations, double tolerance,
                              std::string detail = {});

/// Roots of the indicial equation at x = 0, read from the Taylor data of the
/// coefficient functions: a2 rho(rho-1) + b1 rho + c0 = 0.
std::pair<Complex, Complex> indicial_check(const XDomainOde<Complex>& ode);
std::pair<Complex, Complex> indicial_check(const ModeParameters& mode);

/// Runs every check for overtone n and returns the reports in a fixed order:
/// truncation-identities, series-generation, h-residual-monomial,
/// ansatz-consistency, change-of-variables, es-reconstruction,
/// elimination-identity, indicial-exponents, integrator-cross-check.
std::vector<ResidualReport> verify_mode(int n, const IntegratorConfig& config = {});

// The symbolic residual monomial found by verify_mode, if any.
std::optional<Monomial> residual_monomial(const std::vector<ResidualReport>& reports);

}  // namespace ffpair

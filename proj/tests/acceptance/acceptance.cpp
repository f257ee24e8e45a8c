// Acceptance suite: one PASS/FAIL line per criterion.
//   ffpair_acceptance               run all criteria
//   ffpair_acceptance --criterion N run criterion N only

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "ffpair/config.hpp"
#include "ffpair/error.hpp"
#include "ffpair/gamma.hpp"
#include "ffpair/recurrence.hpp"
#include "ffpair/reduction.hpp"
#include "ffpair/verification.hpp"
#include "ffpair/wavefunction.hpp"

using namespace ffpair;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::string fmt(double v) { return cli::format_number(v); }

Outcome quantization_identities() {
  Outcome o;
  for (int n = 1; n <= 50; ++n) {
    const auto t = truncation_parameters(n);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    o.expect(t.alpha == Rational(n * n, n + 2), tag + "alpha_n != n^2/(n+2)");
    o.expect(t.beta == t.alpha - 2 * n, tag + "beta_n != alpha_n - 2n");
    o.expect(t.d_squared() == Rational(2 * n * n, n + 2), tag + "d_n^2 != 2n^2/(n+2)");
    o.expect(t.beta * t.beta == 4 * t.d_squared() + t.alpha * t.alpha, tag + "beta^2 != 4d^2 + alpha^2");
  }
  o.summary = "exact rational identities for n = 1..50";
  return o;
}

Outcome spectrum_values() {
  Outcome o;
  const auto units = UnitSystem::natural();
  const auto pair = PairParameters::from_compton(1.0, 1.0, 1.0);
  const double expected[] = {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(2.0), 3.0 / std::sqrt(10.0)};
  std::ostringstream s;
  for (int n = 1; n <= 3; ++n) {
    const double got = quantized_spectrum(n, pair, units).im_omega;
    const double err = std::abs(got - expected[n - 1]);
    o.expect(err <= 1e-12, "i omega_" + std::to_string(n) + " = " + fmt(got) + " (error " + fmt(err) + ")");
    s << (n > 1 ? ", " : "") << "i omega_" << n << " = " << fmt(got);
  }
  o.summary = s.str() + " (tol 1e-12)";
  return o;
}

Outcome decay_times() {
  Outcome o;
  const auto units = UnitSystem::natural();
  const auto pair = PairParameters::from_compton(1.0, 1.0, 1.0);
  const double expected[] = {2.449489742783178, std::sqrt(2.0), std::sqrt(10.0) / 3.0};
  std::ostringstream s;
  for (int n = 1; n <= 3; ++n) {
    const double got = quantized_spectrum(n, pair, units).tau;
    const double err = std::abs(got - expected[n - 1]);
    o.expect(err <= 1e-12, "tau_" + std::to_string(n) + " = " + fmt(got) + " (error " + fmt(err) + ")");
    s << (n > 1 ? ", " : "") << "tau_" << n << " = " << fmt(got);
  }
  QuantizedMode previous;
  for (int n = 1; n <= 100; ++n) {
    const auto m = quantized_spectrum(n, pair, units);
    o.expect(m.tau_scaled * m.im_omega_scaled == Surd(1, 1), "tau_n * i omega_n != 1 at n=" + std::to_string(n));
    if (n > 1) {
      o.expect(m.tau < previous.tau, "tau not decreasing at n=" + std::to_string(n));
      o.expect(m.im_omega > previous.im_omega, "i omega not increasing at n=" + std::to_string(n));
    }
    previous = m;
  }
  o.summary = s.str() + "; tau*i omega = 1 exactly and monotone for n = 1..100";
  return o;
}

Outcome fermi_rescaling() {
  Outcome o;
  const auto nat = UnitSystem::natural();
  const auto fermi = UnitSystem::fermi(nat, 300.0);
  const auto pair = PairParameters::from_compton(1.0, 1.0, 1.0);
  for (int n = 1; n <= 100; ++n) {
    const double vac = quantized_spectrum(n, pair, nat).tau;
    o.expect(quantized_spectrum(n, pair, fermi).tau == 300.0 * vac, "tau ratio != 300 at n=" + std::to_string(n));
  }
  const auto constants = PhysicalConstants::from_config(KeyValueConfig::from_file(FFPAIR_DEFAULT_CONFIG));
  const auto electron = PairParameters::from_compton(constants.electron_compton_wavelength(), 1.0, 1.0);
  const double tau1 =
      quantized_spectrum(1, electron, UnitSystem::fermi(UnitSystem::si(constants), constants.fermi_velocity_ratio)).tau;
  o.expect(tau1 >= 1e-19 && tau1 < 1e-18, "electron tau_1 = " + fmt(tau1) + " s outside [1e-19, 1e-18)");
  o.summary = "tau_n(v_F = c/300) = 300 tau_n for n = 1..100; electron tau_1 = " + fmt(tau1) + " s";
  return o;
}

Outcome recurrence_truncation() {
  Outcome o;
  int ok = 0;
  for (int n = 1; n <= 20; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const auto t = truncation_parameters(n);
    const auto z = t.zeta();
    const auto row = row_coefficients<Rational>(static_cast<std::size_t>(n), t.alpha, t.beta, z);
    o.expect(row.b == 0, tag + "B_n = " + to_string(row.b));
    o.expect(row.d == 0, tag + "D_n = " + to_string(row.d));
    try {
      const auto c = generate_series(t.alpha, t.beta, z, static_cast<std::size_t>(n + 3)).coefficients;
      const auto next = row_coefficients<Rational>(static_cast<std::size_t>(n + 1), t.alpha, t.beta, z);
      const bool good = c[n + 2] == 0 && c[n + 3] == -t.alpha * c[n + 1] / next.a && c[n + 3] != 0;
      o.expect(c[n + 2] == 0, tag + "C_{n+2} = " + to_string(c[n + 2]));
      o.expect(c[n + 3] == -t.alpha * c[n + 1] / next.a, tag + "C_{n+3} != -alpha C_{n+1} / A_{n+1}");
      o.expect(c[n + 3] != 0, tag + "C_{n+3} = 0");
      if (good && row.b == 0 && row.d == 0) ++ok;
    } catch (const SingularRowError& e) {
      const std::size_t j = e.row();
      const auto r = row_coefficients<Rational>(j, t.alpha, t.beta, z);
      const auto c = generate_series(t.alpha, t.beta, z, j + 1).coefficients;
      const Rational constraint = c[j + 1] * r.b + c[j] * r.d;
      o.expect(false, tag + "A_" + std::to_string(j) + " = 0, so row " + std::to_string(j) + " requires C_" +
                          std::to_string(j + 1) + " B + C_" + std::to_string(j) + " D = 0 but it equals " +
                          to_string(constraint) + "; the series does not exist");
    }
  }
  o.summary = std::to_string(ok) + "/20 overtones truncate as stated";
  return o;
}

Outcome polynomial_oracle() {
  Outcome o;
  try {
    const auto h = assemble_polynomial(1);
    o.expect(h == PolynomialQ{Rational(1), Rational(-1), make_rational(3, 2)}, "n=1: H != 1 - x + (3/2)x^2");
    const auto mono = single_monomial(h_residual(1));
    o.expect(mono && mono->degree == 3 && mono->coefficient == make_rational(1, 2), "n=1: residual != (1/2)x^3");
  } catch (const Error& e) {
    o.expect(false, std::string("n=1: ") + e.what());
  }
  int ok = 0;
  for (int n = 1; n <= 10; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    try {
      const auto t = truncation_parameters(n);
      const auto h = assemble_polynomial(n);
      const auto mono = single_monomial(h_residual(n));
      const bool good = mono && mono->degree == n + 2 && mono->coefficient == t.alpha * h[static_cast<std::size_t>(n + 1)];
      o.expect(good, tag + "residual is not alpha_n C_{n+1} x^{n+2}");
      if (good) ++ok;
    } catch (const Error& e) {
      o.expect(false, tag + "no polynomial: " + e.what());
    }
  }
  o.summary = "H_1 = 1 - x + (3/2)x^2, residual (1/2)x^3; " + std::to_string(ok) + "/10 single-monomial residuals";
  return o;
}

Outcome derivation_identities() {
  Outcome o;

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto p = PairParameters::from_compton(1.0, 0.9, 0.7);
  const Complex varpi{0.3, -0.4};
  const RadialFunction phi = [&](double r) { return phi_value(p, varpi, r); };
  const RadialFunction dphi = [&](double r) { return Complex(phi_derivative(p, r)); };
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(0.25 + 0.1 * i);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Complex a{u(rng), u(rng)}, b{u(rng), u(rng)}, ka{u(rng), u(rng)}, kb{u(rng), u(rng)};
    const SmoothFunction psi{
        [=](double r) { return a * std::exp(ka * r) + b * std::exp(kb * r); },
        [=](double r) { return a * ka * std::exp(ka * r) + b * kb * std::exp(kb * r); },
        [=](double r) { return a * ka * ka * std::exp(ka * r) + b * kb * kb * std::exp(kb * r); }};
    const auto check = elimination_identity_check(psi, phi, dphi, p.m_tilde(), grid);
    worst_ratio = std::max(worst_ratio, check.max_deviation / check.bound);
    o.expect(check.within_bound(), "elimination trial " + std::to_string(trial) + ": deviation " +
                                       fmt(check.max_deviation) + " > bound " + fmt(check.bound));
  }

  const auto q = quantized_pair(1, 1.0, 1.0);
  const Complex qw = quantized_varpi(1, 1.0);
  const auto mode = mode_parameters(q, qw, BetaBranch::negative);
  const auto radial = second_order_coefficients(q, qw);
  const auto xode = x_domain_ode(mode);
  const double lt = q.lambda_tilde();
  double worst_cov = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double r = lt * (0.05 + 0.1 * k);
    const Complex x = x_of_r(q, qw, r);
    const Complex s{u(rng), u(rng)};
    const Complex c{u(rng), u(rng)};
    const Complex f = std::pow(x, s) * std::exp(c * x);
    const Complex fx = f * (s / x + c);
    const Complex fxx = f * ((s / x + c) * (s / x + c) - s / (x * x));
    const Complex lhs = radial.residual(r, f, -x * fx / lt, (x * fx + x * x * fxx) / (lt * lt));
    const Complex rhs = qw * (1.0 - x) / (lt * lt) * xode.residual(x, f, fx, fxx);
    const double scale = std::max(1.0, std::abs(qw * (1.0 - x) / (lt * lt)) *
                                           (std::abs(x * x * fxx) + std::abs(x * fx / (1.0 - x)) +
                                            std::abs(mode.beta * mode.beta) * std::abs(f)));
    const double dev = std::abs(lhs - rhs) / scale;
    worst_cov = std::max(worst_cov, dev);
    o.expect(dev <= 1e-10, "change of variables at r = " + fmt(r) + ": " + fmt(dev));
  }

  for (const Rational c : {Rational(1), make_rational(1, 300), Rational(2), make_rational(22, 7)}) {
    o.expect(clifford_check(build_generalized_gammas(c), MetricSignature<Rational>::for_speed(c)),
             "Clifford relations fail at c = " + to_string(c));
  }

  o.summary = "elimination max deviation/bound = " + fmt(worst_ratio) + " over 20 functions; change of variables " +
              fmt(worst_cov) + " over 50 radii; Clifford exact";
  return o;
}

Outcome indicial_exponents() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const auto mode = quantized_mode_parameters(n, 1.0, 1.0);
    auto [r1, r2] = indicial_check(mode);
    if (r1.real() < r2.real()) std::swap(r1, r2);
    const double half = std::abs(to_double(truncation_parameters(n).beta)) / 2.0;
    const double err = std::max(std::abs(r1 - half), std::abs(r2 + half));
    worst = std::max(worst, err);
    o.expect(err <= 1e-12, "n=" + std::to_string(n) + ": exponents off by " + fmt(err));
  }
  o.summary = "+-beta_n/2 for n = 1..5, max error " + fmt(worst);
  return o;
}

Outcome strength_independence() {
  Outcome o;
  const auto units = UnitSystem::natural();
  for (int n = 1; n <= 20; ++n) {
    const auto base = quantized_spectrum(n, PairParameters::from_compton(1.0, 1.0, 0.1), units);
    for (const double a : {1.0, 10.0}) {
      const auto other = quantized_spectrum(n, PairParameters::from_compton(1.0, 1.0, a), units);
      o.expect(other == base, "n=" + std::to_string(n) + ": output differs at A = " + fmt(a));
      const auto paired = quantized_spectrum(n, quantized_pair(n, 1.0, a), units);
      o.expect(paired == base, "n=" + std::to_string(n) + ": output differs for quantized pair at A = " + fmt(a));
    }
  }
  o.summary = "QuantizedMode identical for A in {0.1, 1, 10}, n = 1..20";
  return o;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_binary(const std::string& args, const std::filesystem::path& out) {
  const std::string cmd = std::string("\"") + FFPAIR_CLI_PATH + "\" " + args + " > \"" + out.string() + "\"";
  return std::system(cmd.c_str());
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

Outcome run_all_silently();

Outcome cli_reproduction() {
  Outcome o;
  const auto started = std::chrono::steady_clock::now();
  const auto dir = std::filesystem::temp_directory_path() / ("ffpair_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);

  const std::string fig2 = "fig2 --lambda-min 0.1 --lambda-max 2 --lambda-steps 20 --nmax 4";
  o.expect(run_binary(fig2, dir / "fig2_a.csv") == 0, "fig2 run 1 failed");
  o.expect(run_binary(fig2, dir / "fig2_b.csv") == 0, "fig2 run 2 failed");
  const auto a = read_file(dir / "fig2_a.csv");
  o.expect(!a.empty() && a == read_file(dir / "fig2_b.csv"), "fig2 outputs differ between runs");
  o.expect(a.rfind("lambda,n,im_omega,tau\n", 0) == 0, "fig2 header mismatch");
  const auto rows = csv_rows(a);
  o.expect(rows.size() == 80, "fig2 has " + std::to_string(rows.size()) + " rows, expected 80");
  double worst = 0.0;
  for (const auto& row : rows) {
    const double lambda = row[0];
    const double n = row[1];
    const double scaled_omega = row[2] * lambda;
    const double scaled_tau = row[3] / lambda;
    worst = std::max({worst, std::abs(scaled_omega - n / std::sqrt(2 * n + 4)),
                      std::abs(scaled_tau - std::sqrt(2 * n + 4) / n)});
  }
  o.expect(worst <= 1e-12, "fig2 scaled curves off by " + fmt(worst));

  const std::string fig1 = "fig1 --r-min 0 --r-max 10 --samples 201";
  o.expect(run_binary(fig1, dir / "fig1_a.csv") == 0, "fig1 run 1 failed");
  o.expect(run_binary(fig1, dir / "fig1_b.csv") == 0, "fig1 run 2 failed");
  const auto f1 = read_file(dir / "fig1_a.csv");
  o.expect(!f1.empty() && f1 == read_file(dir / "fig1_b.csv"), "fig1 outputs differ between runs");
  const auto vrows = csv_rows(f1);
  const double v0 = vrows.empty() ? 0.0 : vrows.front()[1];
  o.expect(std::abs(v0 - 1.0 / 137.0) <= 1e-15, "fig1 V(0) = " + fmt(v0));

  o.expect(run_binary("verify --n 1", dir / "verify_a.json") == 0, "verify --n 1 exit code nonzero");
  run_binary("verify --n 1", dir / "verify_b.json");
  o.expect(read_file(dir / "verify_a.json") == read_file(dir / "verify_b.json"), "verify outputs differ");
  std::filesystem::remove_all(dir);

  run_all_silently();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  o.expect(seconds < 10.0, "full suite took " + fmt(seconds) + " s");
  o.summary = "fig2 max deviation " + fmt(worst) + ", V(0) = " + fmt(v0) + ", byte-identical reruns, suite " +
              fmt(std::round(seconds * 1000.0) / 1000.0) + " s";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "quantization identities", quantization_identities},
      {2, "spectrum values", spectrum_values},
      {3, "decay times", decay_times},
      {4, "fermi rescaling", fermi_rescaling},
      {5, "recurrence truncation", recurrence_truncation},
      {6, "polynomial oracle", polynomial_oracle},
      {7, "derivation identities", derivation_identities},
      {8, "indicial exponents", indicial_exponents},
      {9, "spectrum independence from A", strength_independence},
      {10, "CLI reproduction", cli_reproduction},
  };
  return all;
}

Outcome run_all_silently() {
  Outcome o;
  for (const auto& c : criteria()) {
    if (c.id == 10) continue;
    try {
      c.run();
    } catch (const std::exception&) {
    }
  }
  return o;
}

bool report(const Criterion& c) {
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.summary << '\n';
  for (const auto& f : o.failures) std::cout << "    " << f << '\n';
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: ffpair_acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    all_pass = report(c) && all_pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return all_pass ? 0 : 1;
}

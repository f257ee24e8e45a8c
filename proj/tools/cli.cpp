#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ffpair/error.hpp"
#include "ffpair/potential.hpp"
#include "ffpair/recurrence.hpp"
#include "ffpair/verification.hpp"
#include "ffpair/wavefunction.hpp"

namespace ffpair::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 15);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, ptr);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Table& table) {
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    auto obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (std::isfinite(row[i]))
        obj[table.columns[i]] = row[i];
      else
        obj[table.columns[i]] = nullptr;
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

Complex parse_complex(const std::string& text) {
  auto parse = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a number: `" + std::string(s) + "`");
    return v;
  };
  const std::string_view s(text);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return {parse(s), 0.0};
  return {parse(s.substr(0, comma)), parse(s.substr(comma + 1))};
}

namespace {

std::optional<PhysicalConstants> load_constants(const RunConfig& config) {
  const auto path = resolve_config_path(config.config_path);
  if (!path) return std::nullopt;
  try {
    return PhysicalConstants::from_config(KeyValueConfig::from_file(*path));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

const PhysicalConstants& require_constants(const std::optional<PhysicalConstants>& constants, const char* why) {
  if (!constants)
    throw UsageError(std::string(why) + " needs physical constants: pass --config or set " +
                     kConfigEnvironmentVariable);
  return *constants;
}

UnitSystem unit_system(const RunConfig& config, const std::optional<PhysicalConstants>& constants) {
  if (config.units == "natural") return UnitSystem::natural();
  if (config.units == "si") return UnitSystem::si(require_constants(constants, "--units si"));
  if (config.units == "fermi") {
    const UnitSystem base = config.base == "si" ? UnitSystem::si(require_constants(constants, "--base si"))
                                                : UnitSystem::natural();
    double ratio = 300.0;
    if (config.vf_ratio)
      ratio = *config.vf_ratio;
    else if (constants)
      ratio = constants->fermi_velocity_ratio;
    if (!(ratio > 0.0)) throw UsageError("--vf-ratio must be positive");
    return UnitSystem::fermi(base, ratio);
  }
  throw UsageError("unknown unit mode `" + config.units + "`");
}

bool uses_si(const RunConfig& config) {
  return config.units == "si" || (config.units == "fermi" && config.base == "si");
}

void require_overtone(int n, const char* flag) {
  if (n < 1) throw UsageError(std::string(flag) + " must be >= 1 (n = 0 has no truncated solution), got " + std::to_string(n));
}

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(count == 1 ? a : a + (b - a) * i / (count - 1));
  return out;
}

}  // namespace

Table run_spectrum(const RunConfig& config) {
  int nmin = config.nmin;
  int nmax = 0;
  if (config.n) {
    nmin = nmax = *config.n;
  } else if (config.nmax) {
    nmax = *config.nmax;
  } else {
    throw UsageError("spectrum needs --n or --nmax");
  }
  const char* flag = config.n ? "--n" : "--nmin";
  require_overtone(nmin, flag);
  require_overtone(nmax, config.n ? "--n" : "--nmax");
  if (nmax < nmin) throw UsageError("--nmax must be >= --nmin");

  const auto constants = load_constants(config);
  const UnitSystem units = unit_system(config, constants);
  double lambda = 1.0;
  if (config.lambda)
    lambda = *config.lambda;
  else if (uses_si(config))
    lambda = require_constants(constants, "SI units").electron_compton_wavelength();
  if (!(lambda > 0.0)) throw UsageError("--lambda must be positive");
  if (!(config.strength >= 0.0)) throw UsageError("--A must be >= 0");

  Table table{{"n", "alpha", "beta", "d", "im_omega", "energy_im", "tau"}, {}};
  for (int n = nmin; n <= nmax; ++n) {
    const auto pair = PairParameters::from_compton(lambda, 1.0, config.strength);
    const auto mode = quantized_spectrum(n, pair, units);
    table.rows.push_back({static_cast<double>(n), to_double(mode.alpha_n), to_double(mode.beta_n), mode.d_n.value(),
                          mode.im_omega, mode.energy_im, mode.tau});
  }
  return table;
}

Table run_fig2(const RunConfig& config) {
  const int nmax = config.nmax.value_or(4);
  require_overtone(nmax, "--nmax");
  if (config.lambda_steps < 2) throw UsageError("--lambda-steps must be >= 2");
  if (!(config.lambda_min > 0.0) || !(config.lambda_max > config.lambda_min))
    throw UsageError("need 0 < --lambda-min < --lambda-max");

  const UnitSystem units = UnitSystem::natural();
  Table table{{"lambda", "n", "im_omega", "tau"}, {}};
  for (const double lambda : linspace(config.lambda_min, config.lambda_max, config.lambda_steps)) {
    const auto pair = PairParameters::from_compton(lambda, 1.0, config.strength);
    for (int n = 1; n <= nmax; ++n) {
      const auto mode = quantized_spectrum(n, pair, units);
      table.rows.push_back({lambda, static_cast<double>(n), mode.im_omega, mode.tau});
    }
  }
  return table;
}

Table run_fig1(const RunConfig& config) {
  if (config.samples < 2) throw UsageError("--samples must be >= 2");
  if (!(config.r_min >= 0.0) || !(config.r_max > config.r_min)) throw UsageError("need 0 <= --r-min < --r-max");
  double alpha_fs = 1.0 / 137.0;
  if (config.alpha_fs) {
    alpha_fs = *config.alpha_fs;
  } else if (const auto constants = load_constants(config)) {
    alpha_fs = constants->fine_structure;
  }
  const double d = config.d.value_or(1.0);
  const double lambda = config.lambda.value_or(1.0);
  if (!(d > 0.0) || !(lambda > 0.0)) throw UsageError("--d and --lambda must be positive");
  const auto pair = PairParameters::from_compton(lambda, d, config.charge_number * alpha_fs);

  Table table{{"r", "V"}, {}};
  for (const double r : linspace(config.r_min, config.r_max, config.samples))
    table.rows.push_back({r, potential_value(pair, r)});
  return table;
}

Table run_wavefunction(const RunConfig& config, std::ostream& warnings) {
  if (!config.n) throw UsageError("wavefunction needs --n");
  require_overtone(*config.n, "--n");
  const int n = *config.n;
  const double lambda = config.lambda.value_or(1.0);
  if (!(lambda > 0.0)) throw UsageError("--lambda must be positive");
  if (!(config.strength >= 0.0)) throw UsageError("--A must be >= 0");

  std::vector<Complex> xs;
  if (!config.x_values.empty()) {
    for (const auto& v : config.x_values) xs.push_back(parse_complex(v));
  } else {
    if (config.x_samples < 1) throw UsageError("--samples must be >= 1");
    const Complex a = parse_complex(config.x_from);
    const Complex b = parse_complex(config.x_to);
    for (const double s : linspace(0.0, 1.0, config.x_samples)) xs.push_back(a + s * (b - a));
  }

  const auto pair = quantized_pair(n, lambda, config.strength);
  const Complex varpi = quantized_varpi(n, lambda);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  Table table{{"x_re", "x_im", "psi_plus_re", "psi_plus_im", "psi_minus_re", "psi_minus_im", "psi_zero_re",
               "psi_zero_im"},
              {}};
  for (const Complex x : xs) {
    const std::array<Complex, 1> sample{x};
    WavefunctionProfile profile;
    try {
      profile = assemble_psi_plus(n, sample);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::singular_sample) throw;
      warnings << "warning: skipping x = " << format_number(x.real()) << "," << format_number(x.imag()) << ": "
               << e.what() << '\n';
      continue;
    }
    Complex minus{nan, nan};
    Complex zero{nan, nan};
    try {
      const auto full = reconstruct_components(profile, pair, varpi);
      minus = full.psi_minus[0];
      zero = full.psi_zero[0];
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::singular_point) throw;
      warnings << "warning: x = " << format_number(x.real()) << "," << format_number(x.imag())
               << ": psi_minus and psi_zero undefined (" << e.what() << ")\n";
    }
    const Complex plus = profile.psi_plus[0];
    table.rows.push_back({x.real(), x.imag(), plus.real(), plus.imag(), minus.real(), minus.imag(), zero.real(),
                          zero.imag()});
  }
  return table;
}

nlohmann::json run_verify(const RunConfig& config, bool& all_pass) {
  if (!config.n) throw UsageError("verify needs --n");
  require_overtone(*config.n, "--n");
  const auto reports = verify_mode(*config.n);

  nlohmann::json doc;
  doc["n"] = *config.n;
  auto checks = nlohmann::json::array();
  all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    checks.push_back({{"id", r.id}, {"kind", std::string(to_string(r.kind))}, {"pass", r.pass}, {"detail", r.detail}});
  }
  doc["checks"] = std::move(checks);
  if (const auto mono = residual_monomial(reports))
    doc["residual_monomial"] = {{"degree", mono->degree}, {"coefficient", to_string(mono->coefficient)}};
  else
    doc["residual_monomial"] = nullptr;
  return doc;
}

namespace {

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.output) {
    out << text;
    return;
  }
  std::ofstream file(*config.output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + *config.output);
  file << text;
}

std::string render(const RunConfig& config, const Table& table) {
  if (config.format == OutputFormat::json) return to_json(table).dump(2) + "\n";
  return to_csv(table);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Closed-form damped modes of a fermion-antifermion pair in an exponential potential", "ffpair"};
  app.require_subcommand(1);
  app.add_option("--config", config.config_path, "Constants file (default: $FFPAIR_CONFIG)");

  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "csv or json")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("-o,--output", config.output, "Write to this file instead of stdout");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Quantized frequencies, energies and decay times");
  spectrum->add_option("--n", config.n, "Single overtone");
  spectrum->add_option("--nmin", config.nmin, "First overtone (default 1)");
  spectrum->add_option("--nmax", config.nmax, "Last overtone");
  spectrum->add_option("--lambda", config.lambda, "Reduced Compton wavelength");
  spectrum->add_option("--A", config.strength, "Potential strength (does not enter the spectrum)");
  spectrum->add_option("--units", config.units)->check(CLI::IsMember({"natural", "si", "fermi"}));
  spectrum->add_option("--base", config.base, "Base units for fermi mode")->check(CLI::IsMember({"natural", "si"}));
  spectrum->add_option("--vf-ratio", config.vf_ratio, "c / v_F in fermi mode");
  add_output(spectrum);

  auto* fig2 = app.add_subcommand("fig2", "i*omega_n and tau_n against lambda (c = 1), long format");
  fig2->add_option("--lambda-min", config.lambda_min);
  fig2->add_option("--lambda-max", config.lambda_max);
  fig2->add_option("--lambda-steps", config.lambda_steps);
  fig2->add_option("--nmax", config.nmax, "Overtones 1..nmax (default 4)");
  add_output(fig2);

  auto* fig1 = app.add_subcommand("fig1", "Potential V(r) = Z alpha_fs exp(-r / (lambda d))");
  fig1->add_option("--r-min", config.r_min);
  fig1->add_option("--r-max", config.r_max);
  fig1->add_option("--samples", config.samples);
  fig1->add_option("--Z", config.charge_number);
  fig1->add_option("--alpha-fs", config.alpha_fs, "Default: fine_structure from config, else 1/137");
  fig1->add_option("--d", config.d, "Range scale (default 1)");
  fig1->add_option("--lambda", config.lambda, "Compton wavelength (default 1)");
  add_output(fig1);

  auto* verify = app.add_subcommand("verify", "Run every exact and numeric check for overtone n (JSON)");
  verify->add_option("--n", config.n)->required();
  verify->add_option("-o,--output", config.output);

  auto* wave = app.add_subcommand("wavefunction", "psi_+, psi_-, psi_0 of overtone n at complex x samples");
  wave->add_option("--n", config.n)->required();
  wave->add_option("--lambda", config.lambda);
  wave->add_option("--A", config.strength);
  wave->add_option("--x", config.x_values, "Sample `re[,im]` (repeatable)");
  wave->add_option("--x-from", config.x_from);
  wave->add_option("--x-to", config.x_to);
  wave->add_option("--samples", config.x_samples);
  add_output(wave);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (spectrum->parsed()) {
      config.subcommand = "spectrum";
      emit(config, render(config, run_spectrum(config)), out);
    } else if (fig2->parsed()) {
      config.subcommand = "fig2";
      emit(config, render(config, run_fig2(config)), out);
    } else if (fig1->parsed()) {
      config.subcommand = "fig1";
      emit(config, render(config, run_fig1(config)), out);
    } else if (wave->parsed()) {
      config.subcommand = "wavefunction";
      emit(config, render(config, run_wavefunction(config, err)), out);
    } else if (verify->parsed()) {
      config.subcommand = "verify";
      bool all_pass = false;
      const auto doc = run_verify(config, all_pass);
      emit(config, doc.dump(2) + "\n", out);
      return all_pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::invalid_argument || e.kind() == ErrorKind::excluded_state ? 2 : 1;
  }
  return 0;
}

}  // namespace ffpair::cli

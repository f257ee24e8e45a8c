#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffpair/config.hpp"
#include "ffpair/matrix.hpp"

namespace ffpair::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> config_path;

  // spectrum / fig2 / verify / wavefunction
  std::optional<int> n;
  int nmin = 1;
  std::optional<int> nmax;

  std::optional<double> lambda;
  double lambda_min = 0.1;
  double lambda_max = 2.0;
  int lambda_steps = 20;

  std::optional<double> d;  // fig1 only; quantized modes always use d_n
  double strength = 1.0;    // A

  std::string units = "natural";
  std::string base = "natural";
  std::optional<double> vf_ratio;

  // fig1
  double r_min = 0.0;
  double r_max = 10.0;
  int samples = 201;
  double charge_number = 1.0;  // Z
  std::optional<double> alpha_fs;

  // wavefunction
  std::vector<std::string> x_values;
  std::string x_from = "0.1,0";
  std::string x_to = "0.9,0";
  int x_samples = 9;

  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output;
};

// Usage errors: reported on stderr, exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

inline constexpr const char* kSpectrumHeader = "n,alpha,beta,d,im_omega,energy_im,tau";
inline constexpr const char* kFig2Header = "lambda,n,im_omega,tau";
inline constexpr const char* kFig1Header = "r,V";
inline constexpr const char* kWavefunctionHeader =
    "x_re,x_im,psi_plus_re,psi_plus_im,psi_minus_re,psi_minus_im,psi_zero_re,psi_zero_im";

// %.15g without locale dependence.
std::string format_number(double value);

std::string to_csv(const Table& table);
nlohmann::json to_json(const Table& table);

Complex parse_complex(const std::string& text);

Table run_spectrum(const RunConfig& config);
Table run_fig2(const RunConfig& config);
Table run_fig1(const RunConfig& config);
Table run_wavefunction(const RunConfig& config, std::ostream& warnings);

// Fills all_pass; the document has fields n, checks, residual_monomial.
nlohmann::json run_verify(const RunConfig& config, bool& all_pass);

// Full command line. Returns the process exit code: 0 ok, 1 verification
// failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffpair::cli

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace ffpair::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ffpair");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.449489742783178) == "2.44948974278318");
  CHECK(format_number(1e-19) == "1e-19");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("complex parsing") {
  CHECK(parse_complex("0.5") == ffpair::Complex(0.5, 0.0));
  CHECK(parse_complex("0.5,-1") == ffpair::Complex(0.5, -1.0));
  CHECK_THROWS_AS(parse_complex("abc"), UsageError);
  CHECK_THROWS_AS(parse_complex("1,2,3"), UsageError);
}

TEST_CASE("spectrum --nmax 2 --lambda 1") {
  const auto r = run_cli({"spectrum", "--nmax", "2", "--lambda", "1"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == kSpectrumHeader);
  CHECK(std::abs(fields(ls[1])[4] - 0.4082482905) <= 1e-10);
  CHECK(std::abs(fields(ls[2])[4] - 0.7071067812) <= 1e-10);
}

TEST_CASE("spectrum in fermi units") {
  const auto r = run_cli({"spectrum", "--nmax", "1", "--units", "fermi", "--vf-ratio", "300"});
  REQUIRE(r.code == 0);
  const auto row = fields(lines(r.out)[1]);
  CHECK(row[6] == doctest::Approx(300.0 * std::sqrt(6.0)).epsilon(1e-14));
}

TEST_CASE("spectrum in SI units reads the constants file") {
  const auto r = run_cli({"--config", FFPAIR_DEFAULT_CONFIG, "spectrum", "--n", "1", "--units", "si"});
  REQUIRE(r.code == 0);
  const double tau = fields(lines(r.out)[1])[6];
  CHECK(tau == doctest::Approx(3.8615926796e-13 / 299792458.0 * std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"spectrum", "--nmax", "0"}).code == 2);
  CHECK(run_cli({"spectrum"}).code == 2);
  CHECK(run_cli({"verify", "--n", "0"}).code == 2);
  CHECK(run_cli({"spectrum", "--nmax", "2", "--format", "xml"}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"fig2", "--lambda-steps", "1"}).code == 2);
  CHECK(run_cli({"--config", "/nonexistent.conf", "spectrum", "--n", "1", "--units", "si"}).code == 2);
  const auto r = run_cli({"spectrum", "--nmax", "0"});
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("help exits 0") { CHECK(run_cli({"--help"}).code == 0); }

TEST_CASE("fig2 rows") {
  const auto r = run_cli({"fig2", "--lambda-min", "1", "--lambda-max", "2", "--lambda-steps", "2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls[0] == kFig2Header);
  REQUIRE(ls.size() == 9);
  const auto first = fields(ls[1]);
  CHECK(first[0] == 1.0);
  CHECK(first[1] == 1.0);
  CHECK(std::abs(first[2] - 0.4082482905) <= 1e-10);
  CHECK(std::abs(first[3] - 2.4494897428) <= 1e-10);
  for (int n = 1; n < 4; ++n) {
    const auto a = fields(ls[static_cast<std::size_t>(n)]);
    const auto b = fields(ls[static_cast<std::size_t>(n + 1)]);
    CHECK(b[2] > a[2]);
    CHECK(b[3] < a[3]);
  }
  CHECK(fields(ls[5])[3] == doctest::Approx(2.0 * first[3]).epsilon(1e-14));
}

TEST_CASE("fig1 rows") {
  const auto r = run_cli({"fig1", "--r-min", "0", "--r-max", "1", "--samples", "2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls[0] == kFig1Header);
  CHECK(fields(ls[1])[1] == doctest::Approx(1.0 / 137.0).epsilon(1e-14));
  CHECK(fields(ls[2])[1] == doctest::Approx(std::exp(-1.0) / 137.0).epsilon(1e-14));
}

TEST_CASE("verify JSON") {
  const auto r = run_cli({"verify", "--n", "1"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 1);
  CHECK(doc["residual_monomial"]["degree"] == 3);
  CHECK(doc["residual_monomial"]["coefficient"] == "1/2");
  REQUIRE(doc["checks"].size() == 9);
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("detail"));
    CHECK((c["kind"] == "exact" || c["kind"] == "numeric"));
    CHECK(c["pass"] == true);
  }

  const auto two = run_cli({"verify", "--n", "2"});
  CHECK(two.code == 1);
  CHECK(nlohmann::json::parse(two.out)["residual_monomial"].is_null());
}

TEST_CASE("wavefunction samples") {
  const auto r = run_cli({"wavefunction", "--n", "1", "--x", "0", "--x", "1", "--x", "0.5,0.2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls[0] == kWavefunctionHeader);
  REQUIRE(ls.size() == 3);
  const auto at_one = fields(ls[1]);
  CHECK(at_one[2] == doctest::Approx(1.5 * std::exp(-1.0 / 6.0)).epsilon(1e-14));
  CHECK(std::isnan(at_one[4]));
  CHECK(r.err.find("skipping x = 0") != std::string::npos);
  CHECK_FALSE(std::isnan(fields(ls[2])[4]));
}

TEST_CASE("json tables and output files") {
  const std::string path = "ffpair_cli_test_output.json";
  const auto r = run_cli({"spectrum", "--n", "1", "--format", "json", "--output", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  REQUIRE(doc.is_array());
  CHECK(doc[0]["tau"].get<double>() == doctest::Approx(std::sqrt(6.0)));
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"fig2", "--nmax", "4"};
  CHECK(run_cli(args).out == run_cli(args).out);
}

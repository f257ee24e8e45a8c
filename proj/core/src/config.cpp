#include "ffpair/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ffpair/error.hpp"

namespace ffpair {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
  KeyValueConfig config;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::config, "line " + std::to_string(line_no) + ": expected `key = value`");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw Error(ErrorKind::config, "line " + std::to_string(line_no) + ": empty key");
    if (!config.entries_.emplace(key, value).second)
      throw Error(ErrorKind::config, "line " + std::to_string(line_no) + ": duplicate key `" + key + "`");
  }
  return config;
}

KeyValueConfig KeyValueConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::config, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::optional<std::string> KeyValueConfig::text(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> KeyValueConfig::number(const std::string& key) const {
  const auto value = text(key);
  if (!value) return std::nullopt;
  double out = 0.0;
  const char* first = value->data();
  const char* last = first + value->size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw Error(ErrorKind::config, "key `" + key + "`: not a number: " + *value);
  return out;
}

double KeyValueConfig::require_number(const std::string& key) const {
  const auto value = number(key);
  if (!value) throw Error(ErrorKind::config, "missing key `" + key + "`");
  return *value;
}

std::optional<std::filesystem::path> resolve_config_path(const std::optional<std::string>& explicit_path) {
  if (explicit_path && !explicit_path->empty()) return std::filesystem::path(*explicit_path);
  if (const char* env = std::getenv(kConfigEnvironmentVariable); env != nullptr && *env != '\0')
    return std::filesystem::path(env);
  return std::nullopt;
}

PhysicalConstants PhysicalConstants::from_config(const KeyValueConfig& config) {
  PhysicalConstants c{};
  c.speed_of_light = config.require_number("speed_of_light");
  c.reduced_planck = config.require_number("reduced_planck");
  c.electron_mass = config.require_number("electron_mass");
  c.reduced_compton_wavelength = config.number("reduced_compton_wavelength");
  c.fine_structure = config.number("fine_structure").value_or(1.0 / 137.0);
  c.fermi_velocity_ratio = config.number("fermi_velocity_ratio").value_or(300.0);
  if (c.speed_of_light <= 0 || c.reduced_planck <= 0 || c.electron_mass <= 0)
    throw Error(ErrorKind::config, "physical constants must be positive");
  if (c.fermi_velocity_ratio <= 0) throw Error(ErrorKind::config, "fermi_velocity_ratio must be positive");
  return c;
}

double PhysicalConstants::electron_compton_wavelength() const {
  if (reduced_compton_wavelength) return *reduced_compton_wavelength;
  return reduced_planck / (electron_mass * speed_of_light);
}

}  // namespace ffpair

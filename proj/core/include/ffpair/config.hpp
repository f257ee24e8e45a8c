#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace ffpair {

// `key = value` lines, `#` comments, blank lines ignored. Keys are unique.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text);
  static KeyValueConfig from_file(const std::filesystem::path& path);

  bool contains(const std::string& key) const { return entries_.count(key) != 0; }
  std::optional<std::string> text(const std::string& key) const;
  std::optional<double> number(const std::string& key) const;
  double require_number(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

inline constexpr const char* kConfigEnvironmentVariable = "FFPAIR_CONFIG";

// Explicit path wins, then $FFPAIR_CONFIG. Empty if neither is set.
std::optional<std::filesystem::path> resolve_config_path(const std::optional<std::string>& explicit_path);

struct PhysicalConstants {
  double speed_of_light;
  double reduced_planck;
  double electron_mass;
  std::optional<double> reduced_compton_wavelength;
  double fine_structure;
  double fermi_velocity_ratio;

  static PhysicalConstants from_config(const KeyValueConfig& config);

  // hbar / (m_e c), or the tabulated value when the file provides one.
  double electron_compton_wavelength() const;
};

}  // namespace ffpair

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ffpair {

enum class ErrorKind {
  invalid_argument,
  degenerate_frequency,
  infinite_radius,
  inconsistent_bundle,
  singular_point,
  regular_singular_point,
  indicial_degeneracy,
  leading_coefficient_singular,
  excluded_state,
  singular_sample,
  step_limit,
  singular_approach,
  config,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the series engine when A_j vanishes; j is the offending row.
class SingularRowError : public Error {
 public:
  SingularRowError(std::size_t row, const std::string& what)
      : Error(ErrorKind::leading_coefficient_singular, what), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace ffpair

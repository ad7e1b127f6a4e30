#ifndef SRSIM_ERRORS_HPP
#define SRSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srsim {

// Exit-code mapping used by the CLI: ConfigError -> 2, NumericError -> 3,
// IoError -> 4.

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FitError : NumericError {
  explicit FitError(const std::string& msg) : NumericError(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace srsim

#endif

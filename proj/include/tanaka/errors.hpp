#ifndef TANAKA_ERRORS_HPP
#define TANAKA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tanaka {

// Bad user input: config keys, malformed expressions, out-of-range n/mu.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Predicted basis size exceeds the configured cap.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tanaka

#endif

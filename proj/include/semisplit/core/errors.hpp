#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semisplit {

// Invalid user-supplied configuration (game spec, agent spec, CLI values).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Agent spec text that fails to parse; `position` is the byte offset of the
// offending token.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : ConfigError(message + " at position " + std::to_string(position)), position_(position) {}

  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Something that should be unreachable happened while running (e.g. an agent
// produced a move its opponent's encoding does not recognise).
class RuntimeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semisplit

#pragma once

#include <stdexcept>
#include <string>

namespace grovercorr {

enum class ErrorKind {
    InvalidConfig,
    Partition,
    Capacity,
    NumericDomain,
    Shape,
    InvalidResolution,
    UnsupportedMeasurement,
    InvalidState,
};

const char *to_string(ErrorKind kind) noexcept;

/// Thrown by every operation in the library. `kind()` lets callers (the CLI in
/// particular) map failures onto exit codes without parsing messages.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace grovercorr

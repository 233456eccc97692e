#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flightclust {

/// Failure categories surfaced by the library. The CLI maps each one to a
/// distinct exit code and the HTTP service to a status code.
enum class ErrorCode {
  Domain,
  Format,
  EmptyResult,
  MissingAirport,
  InsufficientPoints,
  DegenerateTrack,
  UndefinedSilhouette,
  TooFewFlights,
  Validation,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }

  /// Name of the offending request field, empty when not field-specific.
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace flightclust

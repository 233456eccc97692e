#include "flightclust/error.hpp"

namespace flightclust {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Domain: return "domain_error";
    case ErrorCode::Format: return "format_error";
    case ErrorCode::EmptyResult: return "empty_result";
    case ErrorCode::MissingAirport: return "missing_airport";
    case ErrorCode::InsufficientPoints: return "insufficient_points";
    case ErrorCode::DegenerateTrack: return "degenerate_track";
    case ErrorCode::UndefinedSilhouette: return "undefined_silhouette";
    case ErrorCode::TooFewFlights: return "too_few_flights";
    case ErrorCode::Validation: return "validation_error";
    case ErrorCode::Io: return "io_error";
  }
  return "unknown";
}

}  // namespace flightclust

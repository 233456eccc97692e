#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flightclust/geo.hpp"

namespace flightclust {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;
using Date = std::chrono::year_month_day;

/// One surveillance fix.
struct TrackPoint {
  GeoPoint position;
  double altitude_ff = 0.0;  // hundreds of feet
  double speed_kt = 0.0;
  Timestamp time{};
};

/// Ordered fixes of one flight. The constructor enforces a non-empty,
/// strictly time-ascending sequence of valid points.
class FlightTrack {
 public:
  FlightTrack(std::string flight_id, std::string origin,
              std::string destination, std::vector<TrackPoint> points);

  const std::string& flight_id() const noexcept { return flight_id_; }
  const std::string& origin() const noexcept { return origin_; }
  const std::string& destination() const noexcept { return destination_; }
  std::span<const TrackPoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  std::vector<GeoPoint> positions() const;
  Date first_date() const;

 private:
  std::string flight_id_;
  std::string origin_;
  std::string destination_;
  std::vector<TrackPoint> points_;
};

struct AirportLocation {
  std::string code;
  GeoPoint position;
};

/// Origin/destination pair plus an inclusive UTC date range.
struct TrackQuery {
  std::string origin;
  std::string destination;
  Date date_from;
  Date date_to;

  /// Throws Error(Validation) naming the offending fields.
  void validate() const;
};

enum class TrackFormat { Csv, Jsonl };

struct ParseResult {
  std::vector<FlightTrack> tracks;  // sorted by flight_id
  std::size_t skipped_rows = 0;
};

/// Parses RFC 3339 UTC timestamps such as 2014-06-01T14:03:00Z, with optional
/// fractional seconds.
std::optional<Timestamp> parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp t);

/// Parses YYYY-MM-DD.
std::optional<Date> parse_date(std::string_view text);
std::string format_date(Date d);

/// Reads tracks in the flat CSV or JSONL format. Rows with unparseable or
/// out-of-range fields, and rows repeating an earlier timestamp of the same
/// flight, are skipped and counted.
ParseResult parse_tracks(std::istream& in, TrackFormat format);

/// Writes tracks in the CSV format accepted by parse_tracks.
void write_tracks_csv(std::ostream& out, std::span<const FlightTrack> tracks);

/// Reads the `code,lat,lon` airport table.
std::vector<AirportLocation> parse_airports(std::istream& in);
void write_airports_csv(std::ostream& out,
                        std::span<const AirportLocation> airports);

/// In-memory flight store. Built once, then read-only.
class TrackStore {
 public:
  /// Throws Error(Validation) on a duplicate flight_id.
  void add(FlightTrack track);
  void add_airport(AirportLocation airport);

  std::size_t size() const noexcept { return flights_.size(); }

  /// Flights matching origin, destination and the first-fix date range,
  /// ordered by flight_id.
  std::vector<FlightTrack> query(const TrackQuery& q) const;

  const AirportLocation& airport(std::string_view code) const;
  double airport_gcd_nm(std::string_view origin,
                        std::string_view destination) const;

 private:
  std::map<std::string, FlightTrack, std::less<>> flights_;
  std::map<std::string, AirportLocation, std::less<>> airports_;
};

/// Loads a track file, picking the format from the extension (.jsonl or csv).
ParseResult load_tracks_file(const std::filesystem::path& path);

/// Loads `airports.csv` plus every other *.csv / *.jsonl file in `dir`.
TrackStore load_data_directory(const std::filesystem::path& dir);

}  // namespace flightclust

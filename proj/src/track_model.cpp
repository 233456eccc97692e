#include "flightclust/track_model.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "flightclust/error.hpp"

namespace flightclust {

namespace {

using namespace std::chrono;

constexpr std::array<std::string_view, 8> kTrackColumns = {
    "flight_id", "timestamp", "lat",    "lon",
    "altitude_ff", "speed_kt", "origin", "destination"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

struct RawRow {
  std::string flight_id;
  std::string origin;
  std::string destination;
  TrackPoint point;
};

// Field-level validation shared by the CSV and JSONL readers.
std::optional<RawRow> make_row(std::string_view flight_id,
                               std::string_view timestamp, std::string_view lat,
                               std::string_view lon, std::string_view altitude,
                               std::string_view speed, std::string_view origin,
                               std::string_view destination) {
  if (flight_id.empty() || origin.empty() || destination.empty()) {
    return std::nullopt;
  }
  const auto t = parse_timestamp(timestamp);
  const auto la = parse_double(lat);
  const auto lo = parse_double(lon);
  const auto alt = parse_double(altitude);
  const auto spd = parse_double(speed);
  if (!t || !la || !lo || !alt || !spd) return std::nullopt;
  const GeoPoint pos{*la, normalize_lon(*lo)};
  if (!is_valid(pos) || *alt < 0.0 || *spd < 0.0) return std::nullopt;
  return RawRow{std::string(flight_id), std::string(origin),
                std::string(destination), TrackPoint{pos, *alt, *spd, *t}};
}

ParseResult assemble(std::vector<RawRow> rows, std::size_t skipped) {
  std::map<std::string, std::vector<RawRow>> by_flight;
  for (auto& row : rows) {
    auto& bucket = by_flight[row.flight_id];
    if (!bucket.empty() && (bucket.front().origin != row.origin ||
                            bucket.front().destination != row.destination)) {
      ++skipped;
      continue;
    }
    bucket.push_back(std::move(row));
  }

  ParseResult result;
  for (auto& [id, bucket] : by_flight) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const RawRow& a, const RawRow& b) {
                       return a.point.time < b.point.time;
                     });
    std::vector<TrackPoint> points;
    points.reserve(bucket.size());
    for (const auto& row : bucket) {
      if (!points.empty() && points.back().time == row.point.time) {
        ++skipped;
        continue;
      }
      points.push_back(row.point);
    }
    result.tracks.emplace_back(id, bucket.front().origin,
                               bucket.front().destination, std::move(points));
  }
  result.skipped_rows = skipped;
  if (result.tracks.empty()) {
    throw Error(ErrorCode::EmptyResult, "track input contains no valid rows");
  }
  return result;
}

ParseResult parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::Format, "track CSV: missing header");
  }
  const auto header = split_csv(line);
  std::array<std::size_t, kTrackColumns.size()> column{};
  if (header.size() != kTrackColumns.size()) {
    throw Error(ErrorCode::Format, "track CSV: expected header '" +
                                       std::string("flight_id,timestamp,lat,lon,"
                                                   "altitude_ff,speed_kt,origin,"
                                                   "destination") +
                                       "'");
  }
  for (std::size_t c = 0; c < kTrackColumns.size(); ++c) {
    const auto it = std::find(header.begin(), header.end(), kTrackColumns[c]);
    if (it == header.end()) {
      throw Error(ErrorCode::Format, "track CSV: header is missing column '" +
                                         std::string(kTrackColumns[c]) + "'");
    }
    column[c] = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<RawRow> rows;
  std::size_t skipped = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      ++skipped;
      continue;
    }
    auto row = make_row(fields[column[0]], fields[column[1]], fields[column[2]],
                        fields[column[3]], fields[column[4]], fields[column[5]],
                        fields[column[6]], fields[column[7]]);
    if (row) {
      rows.push_back(std::move(*row));
    } else {
      ++skipped;
    }
  }
  return assemble(std::move(rows), skipped);
}

// JSONL numeric fields may be JSON numbers or strings.
std::optional<std::string> json_field(const nlohmann::json& obj,
                                      std::string_view key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number()) {
    return it->is_number_float() ? format_double(it->get<double>()) : it->dump();
  }
  return std::nullopt;
}

ParseResult parse_jsonl(std::istream& in) {
  std::vector<RawRow> rows;
  std::size_t skipped = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      ++skipped;
      continue;
    }
    std::array<std::string, kTrackColumns.size()> f;
    bool complete = true;
    for (std::size_t c = 0; c < kTrackColumns.size() && complete; ++c) {
      auto v = json_field(obj, kTrackColumns[c]);
      complete = v.has_value();
      if (complete) f[c] = std::move(*v);
    }
    std::optional<RawRow> row;
    if (complete) row = make_row(f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7]);
    if (row) {
      rows.push_back(std::move(*row));
    } else {
      ++skipped;
    }
  }
  return assemble(std::move(rows), skipped);
}

}  // namespace

FlightTrack::FlightTrack(std::string flight_id, std::string origin,
                         std::string destination, std::vector<TrackPoint> points)
    : flight_id_(std::move(flight_id)),
      origin_(std::move(origin)),
      destination_(std::move(destination)),
      points_(std::move(points)) {
  if (flight_id_.empty()) {
    throw Error(ErrorCode::Domain, "flight track needs a flight_id");
  }
  if (points_.empty()) {
    throw Error(ErrorCode::Domain, "flight " + flight_id_ + " has no points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!is_valid(p.position) || !(p.speed_kt >= 0.0) || !(p.altitude_ff >= 0.0)) {
      throw Error(ErrorCode::Domain, "flight " + flight_id_ + ": invalid point " +
                                         std::to_string(i));
    }
    if (i > 0 && !(points_[i - 1].time < p.time)) {
      throw Error(ErrorCode::Domain,
                  "flight " + flight_id_ + ": timestamps not strictly ascending");
    }
  }
}

std::vector<GeoPoint> FlightTrack::positions() const {
  std::vector<GeoPoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.position);
  return out;
}

Date FlightTrack::first_date() const {
  return Date{floor<days>(points_.front().time)};
}

void TrackQuery::validate() const {
  if (origin.empty()) throw Error(ErrorCode::Validation, "origin is required", "origin");
  if (destination.empty()) {
    throw Error(ErrorCode::Validation, "destination is required", "destination");
  }
  if (!date_from.ok()) throw Error(ErrorCode::Validation, "invalid date", "from");
  if (!date_to.ok()) throw Error(ErrorCode::Validation, "invalid date", "to");
  if (sys_days{date_from} > sys_days{date_to}) {
    throw Error(ErrorCode::Validation, "'from' must not be after 'to'", "from,to");
  }
}

std::optional<Timestamp> parse_timestamp(std::string_view s) {
  // YYYY-MM-DDTHH:MM:SS[.fff]Z or +00:00
  if (s.size() < 20 || s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != 't') ||
      s[13] != ':' || s[16] != ':') {
    return std::nullopt;
  }
  const auto date = parse_date(s.substr(0, 10));
  int hh = 0, mm = 0, ss = 0;
  if (!date || !parse_int(s.substr(11, 2), hh) || !parse_int(s.substr(14, 2), mm) ||
      !parse_int(s.substr(17, 2), ss) || hh > 23 || mm > 59 || ss > 59) {
    return std::nullopt;
  }
  std::string_view rest = s.substr(19);
  long millis = 0;
  if (!rest.empty() && rest.front() == '.') {
    rest.remove_prefix(1);
    std::size_t digits = 0;
    long scale = 100;
    while (digits < rest.size() && rest[digits] >= '0' && rest[digits] <= '9') {
      millis += (rest[digits] - '0') * scale;
      scale /= 10;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
    rest.remove_prefix(digits);
  }
  if (rest != "Z" && rest != "z" && rest != "+00:00") return std::nullopt;
  return Timestamp{sys_days{*date} + hours{hh} + minutes{mm} + seconds{ss} +
                   milliseconds{millis}};
}

std::string format_timestamp(Timestamp t) {
  const auto day = floor<days>(t);
  const hh_mm_ss<milliseconds> tod{t - day};
  char buf[40];
  const Date ymd{day};
  const long ms = static_cast<long>(tod.subseconds().count());
  int len = std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ld",
                          static_cast<int>(ymd.year()),
                          static_cast<unsigned>(ymd.month()),
                          static_cast<unsigned>(ymd.day()),
                          static_cast<long>(tod.hours().count()),
                          static_cast<long>(tod.minutes().count()),
                          static_cast<long>(tod.seconds().count()));
  if (ms != 0) {
    len += std::snprintf(buf + len, sizeof buf - len, ".%03ld", ms);
  }
  return std::string(buf, len) + "Z";
}

std::optional<Date> parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  int y = 0;
  unsigned m = 0, d = 0;
  if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), m) ||
      !parse_int(s.substr(8, 2), d)) {
    return std::nullopt;
  }
  const Date date{year{y}, month{m}, day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_date(Date d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

ParseResult parse_tracks(std::istream& in, TrackFormat format) {
  return format == TrackFormat::Csv ? parse_csv(in) : parse_jsonl(in);
}

void write_tracks_csv(std::ostream& out, std::span<const FlightTrack> tracks) {
  out << "flight_id,timestamp,lat,lon,altitude_ff,speed_kt,origin,destination\n";
  for (const auto& t : tracks) {
    for (const auto& p : t.points()) {
      out << t.flight_id() << ',' << format_timestamp(p.time) << ','
          << format_double(p.position.lat) << ',' << format_double(p.position.lon)
          << ',' << format_double(p.altitude_ff) << ',' << format_double(p.speed_kt)
          << ',' << t.origin() << ',' << t.destination() << '\n';
    }
  }
}

std::vector<AirportLocation> parse_airports(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::Format, "airport CSV: missing header");
  }
  const auto header = split_csv(line);
  if (header.size() != 3 || header[0] != "code" || header[1] != "lat" ||
      header[2] != "lon") {
    throw Error(ErrorCode::Format, "airport CSV: expected header 'code,lat,lon'");
  }
  std::vector<AirportLocation> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split_csv(line);
    const auto lat = f.size() == 3 ? parse_double(f[1]) : std::nullopt;
    const auto lon = f.size() == 3 ? parse_double(f[2]) : std::nullopt;
    const GeoPoint pos{lat.value_or(1e9), lon.value_or(1e9)};
    if (f.size() != 3 || f[0].empty() || !is_valid(pos)) {
      throw Error(ErrorCode::Format,
                  "airport CSV: bad row at line " + std::to_string(line_no));
    }
    out.push_back(AirportLocation{std::string(f[0]), pos});
  }
  return out;
}

void write_airports_csv(std::ostream& out,
                        std::span<const AirportLocation> airports) {
  out << "code,lat,lon\n";
  for (const auto& a : airports) {
    out << a.code << ',' << format_double(a.position.lat) << ','
        << format_double(a.position.lon) << '\n';
  }
}

void TrackStore::add(FlightTrack track) {
  const std::string id = track.flight_id();
  if (!flights_.emplace(id, std::move(track)).second) {
    throw Error(ErrorCode::Validation, "duplicate flight_id " + id, "flight_id");
  }
}

void TrackStore::add_airport(AirportLocation airport) {
  const std::string code = airport.code;
  if (!airports_.emplace(code, std::move(airport)).second) {
    throw Error(ErrorCode::Validation, "duplicate airport code " + code, "code");
  }
}

std::vector<FlightTrack> TrackStore::query(const TrackQuery& q) const {
  const sys_days from{q.date_from};
  const sys_days to{q.date_to};
  std::vector<FlightTrack> out;
  for (const auto& [id, track] : flights_) {
    if (track.origin() != q.origin || track.destination() != q.destination) continue;
    const sys_days first{track.first_date()};
    if (first >= from && first <= to) out.push_back(track);
  }
  return out;
}

const AirportLocation& TrackStore::airport(std::string_view code) const {
  const auto it = airports_.find(code);
  if (it == airports_.end()) {
    throw Error(ErrorCode::MissingAirport,
                "unknown airport code '" + std::string(code) + "'");
  }
  return it->second;
}

double TrackStore::airport_gcd_nm(std::string_view origin,
                                  std::string_view destination) const {
  return great_circle_nm(airport(origin).position, airport(destination).position);
}

ParseResult load_tracks_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open track file " + path.string());
  }
  const auto format =
      path.extension() == ".jsonl" ? TrackFormat::Jsonl : TrackFormat::Csv;
  return parse_tracks(in, format);
}

TrackStore load_data_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::Io, "data directory not found: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  TrackStore store;
  bool have_airports = false;
  for (const auto& file : files) {
    if (file.filename() == "airports.csv") {
      std::ifstream in(file);
      for (auto& a : parse_airports(in)) store.add_airport(std::move(a));
      have_airports = true;
    } else if (file.extension() == ".csv" || file.extension() == ".jsonl") {
      for (auto& t : load_tracks_file(file).tracks) store.add(std::move(t));
    }
  }
  if (!have_airports) {
    throw Error(ErrorCode::Io, "data directory has no airports.csv: " + dir.string());
  }
  return store;
}

}  // namespace flightclust

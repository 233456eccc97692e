// flightclust: batch clustering, synthetic scenario export and the HTTP API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "flightclust/error.hpp"
#include "flightclust/json_io.hpp"
#include "flightclust/pipeline.hpp"
#include "flightclust/service.hpp"
#include "flightclust/synthgen.hpp"
#include "flightclust/track_model.hpp"

namespace fs = std::filesystem;
using namespace flightclust;

namespace {

// Exit codes, one per failure category.
int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Validation:
    case ErrorCode::Domain: return 2;
    case ErrorCode::Io: return 3;
    case ErrorCode::Format: return 4;
    case ErrorCode::EmptyResult: return 5;
    case ErrorCode::TooFewFlights: return 6;
    case ErrorCode::MissingAirport: return 7;
    case ErrorCode::UndefinedSilhouette: return 8;
    case ErrorCode::InsufficientPoints:
    case ErrorCode::DegenerateTrack: return 9;
  }
  return 1;
}

struct ClusterArgs {
  std::string data;
  std::string airports;
  std::string origin;
  std::string dest;
  std::string from;
  std::string to;
  std::string metric = "geo";
  std::string mode = "auto";
  std::optional<double> threshold;
  std::optional<std::size_t> k;
  std::optional<std::size_t> k_cap;
  std::string linkage = "average";
  std::size_t extract_n = 1;
  std::string out;
  std::string geojson;
};

struct SynthArgs {
  std::string kind = "two-bundles";
  std::optional<std::size_t> flights_per_group;
  std::optional<std::size_t> points;
  std::optional<double> jitter;
  std::uint64_t seed = 1;
  std::string out;
  std::string airports_out;
};

TrackStore load_store(const ClusterArgs& a) {
  if (fs::is_directory(a.data)) {
    if (!a.airports.empty()) {
      throw Error(ErrorCode::Validation, "--airports is implied by a data directory",
                  "airports");
    }
    return load_data_directory(a.data);
  }
  if (a.airports.empty()) {
    throw Error(ErrorCode::Validation, "--airports is required with a track file",
                "airports");
  }
  TrackStore store;
  auto parsed = load_tracks_file(a.data);
  if (parsed.skipped_rows > 0) {
    std::fprintf(stderr, "flightclust: skipped %zu malformed rows in %s\n",
                 parsed.skipped_rows, a.data.c_str());
  }
  for (auto& t : parsed.tracks) store.add(std::move(t));
  std::ifstream in(a.airports);
  if (!in) throw Error(ErrorCode::Io, "cannot open airport table " + a.airports);
  for (auto& ap : parse_airports(in)) store.add_airport(std::move(ap));
  return store;
}

ClusterRequest make_request(const ClusterArgs& a) {
  nlohmann::json body = {{"origin", a.origin}, {"destination", a.dest},
                         {"from", a.from},     {"to", a.to},
                         {"metric", a.metric}, {"extraction_n", a.extract_n},
                         {"linkage", a.linkage}, {"mode", a.mode}};
  if (a.threshold) body["threshold"] = *a.threshold;
  if (a.k) body["k"] = *a.k;
  if (a.k_cap) body["k_cap"] = *a.k_cap;
  return json_io::parse_cluster_request(body);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
}

int run_cluster_command(const ClusterArgs& a) {
  const ClusterRequest request = make_request(a);
  const TrackStore store = load_store(a);
  const ClusterOutcome outcome = run_cluster(store, request);
  const std::string report = json_io::to_json(outcome, request).dump(2) + "\n";
  if (a.out.empty() || a.out == "-") {
    std::cout << report;
  } else {
    write_file(a.out, report);
  }
  if (!a.geojson.empty()) write_file(a.geojson, json_io::to_geojson(outcome).dump() + "\n");
  std::fprintf(stderr, "flightclust: %zu flights, k = %zu%s\n", outcome.flights.size(),
               outcome.clustering.k,
               outcome.silhouette
                   ? (", silhouette " + std::to_string(outcome.silhouette->score)).c_str()
                   : "");
  return 0;
}

int run_synth_command(const SynthArgs& a) {
  const auto kind = synth::parse_scenario(a.kind);
  if (!kind) throw Error(ErrorCode::Validation, "unknown scenario '" + a.kind + "'", "kind");
  synth::ScenarioSpec spec = synth::default_spec(*kind);
  if (a.flights_per_group) spec.flights_per_group = *a.flights_per_group;
  if (a.points) spec.points_per_flight = *a.points;
  if (a.jitter) spec.jitter_deg = *a.jitter;
  spec.seed = a.seed;
  const auto scenario = synth::generate(spec);

  std::ofstream out(a.out, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + a.out);
  write_tracks_csv(out, scenario.flights);
  if (!a.airports_out.empty()) {
    std::ofstream ap(a.airports_out, std::ios::binary);
    if (!ap) throw Error(ErrorCode::Io, "cannot write " + a.airports_out);
    write_airports_csv(ap, synth::scenario_airports());
  }
  std::fprintf(stderr, "flightclust: wrote %zu %s-%s flights to %s\n",
               scenario.flights.size(), scenario.origin.c_str(),
               scenario.destination.c_str(), a.out.c_str());
  return 0;
}

int run_server(const std::string& data_dir, const std::string& host, int port) {
  ApiService service(load_data_directory(data_dir));
  httplib::Server server;
  service.mount(server);
  std::fprintf(stderr, "flightclust: serving %s on http://%s:%d\n", data_dir.c_str(),
               host.c_str(), port);
  if (!server.listen(host, port)) {
    throw Error(ErrorCode::Io, "cannot listen on " + host + ":" + std::to_string(port));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flight path clustering between an origin and destination airport"};
  app.require_subcommand(0, 1);

  bool serve = false;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string data_dir;
  app.add_flag("--serve", serve, "Run the HTTP/JSON API");
  app.add_option("--port", port, "Listen port for --serve");
  app.add_option("--host", host, "Listen address for --serve");
  app.add_option("--data-dir", data_dir,
                 "Directory with airports.csv and track *.csv / *.jsonl files")
      ->check(CLI::ExistingDirectory);

  ClusterArgs c;
  auto* cluster = app.add_subcommand("cluster", "Cluster the flights of one query");
  cluster->add_option("--data", c.data, "Track file (.csv / .jsonl) or data directory")
      ->required();
  cluster->add_option("--airports", c.airports, "Airport table code,lat,lon");
  cluster->add_option("--origin", c.origin, "Origin airport code")->required();
  cluster->add_option("--dest", c.dest, "Destination airport code")->required();
  cluster->add_option("--from", c.from, "First date YYYY-MM-DD (inclusive)")->required();
  cluster->add_option("--to", c.to, "Last date YYYY-MM-DD (inclusive)")->required();
  cluster->add_option("--metric", c.metric, "geo | cosine")
      ->check(CLI::IsMember({"geo", "geographic", "cosine"}));
  cluster->add_option("--mode", c.mode, "auto | threshold | k")
      ->check(CLI::IsMember({"auto", "threshold", "k"}));
  cluster->add_option("--threshold", c.threshold,
                      "Cut threshold (nm for geo, [0, 2] for cosine)");
  cluster->add_option("--k", c.k, "Cluster count for --mode k");
  cluster->add_option("--k-cap", c.k_cap, "Largest k tried by --mode auto");
  cluster->add_option("--linkage", c.linkage, "average | complete | single")
      ->check(CLI::IsMember({"average", "complete", "single"}));
  cluster->add_option("--extract-n", c.extract_n, "Keep one point in every N")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--out", c.out, "JSON report path (default stdout)");
  cluster->add_option("--geojson", c.geojson, "GeoJSON FeatureCollection output path");

  SynthArgs s;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic scenario as track CSV");
  synth_cmd->add_option("--kind", s.kind,
                        "two-bundles | parallel-corridors | "
                        "shared-corridor-divergent-arrivals");
  synth_cmd->add_option("--flights-per-group", s.flights_per_group);
  synth_cmd->add_option("--points", s.points, "Points per flight");
  synth_cmd->add_option("--jitter", s.jitter, "Lateral wander amplitude in degrees");
  synth_cmd->add_option("--seed", s.seed);
  synth_cmd->add_option("--out", s.out, "Track CSV path")->required();
  synth_cmd->add_option("--airports-out", s.airports_out, "Airport table path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (serve) {
      if (data_dir.empty()) {
        std::fprintf(stderr, "flightclust: --serve needs --data-dir\n");
        return 2;
      }
      return run_server(data_dir, host, port);
    }
    if (cluster->parsed()) return run_cluster_command(c);
    if (synth_cmd->parsed()) return run_synth_command(s);
    std::cout << app.help();
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "flightclust: %s\n", e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "flightclust: %s\n", e.what());
    return 1;
  }
}

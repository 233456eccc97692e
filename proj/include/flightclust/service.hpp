#pragma once

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "flightclust/error.hpp"
#include "flightclust/pipeline.hpp"
#include "flightclust/track_model.hpp"

namespace httplib {
class Server;
}

namespace flightclust {

/// HTTP status used for each error category.
int http_status(ErrorCode code) noexcept;

/// `{"error": code, "message": ..., "field": ...}`
nlohmann::json error_body(const Error& e);

/// JSON API over a read-only TrackStore:
///   GET  /api/health
///   GET  /api/flights?origin=&dest=&from=&to=
///   POST /api/cluster
/// Handlers are plain functions so they can be exercised without a socket;
/// mount() wires them into an httplib::Server.
class ApiService {
 public:
  struct Reply {
    int status = 200;
    std::string body;
  };

  explicit ApiService(TrackStore store, std::size_t cache_capacity = 8);

  Reply health() const;
  Reply flights(const std::map<std::string, std::string>& params) const;
  Reply cluster(std::string_view body);

  void mount(httplib::Server& server);

 private:
  TrackStore store_;
  MatrixCache cache_;
};

}  // namespace flightclust

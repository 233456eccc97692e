#include "flightclust/service.hpp"

#include <httplib.h>

#include "flightclust/json_io.hpp"

namespace flightclust {

using nlohmann::json;

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Validation:
    case ErrorCode::Format:
    case ErrorCode::Domain: return 400;
    case ErrorCode::EmptyResult:
    case ErrorCode::MissingAirport: return 404;
    case ErrorCode::InsufficientPoints:
    case ErrorCode::DegenerateTrack:
    case ErrorCode::UndefinedSilhouette:
    case ErrorCode::TooFewFlights: return 422;
    case ErrorCode::Io: return 500;
  }
  return 500;
}

json error_body(const Error& e) {
  json j = {{"error", to_string(e.code())}, {"message", e.what()}};
  if (!e.field().empty()) j["field"] = e.field();
  return j;
}

namespace {

ApiService::Reply reply_error(const Error& e) {
  return {http_status(e.code()), error_body(e).dump()};
}

const std::string& param(const std::map<std::string, std::string>& params,
                         const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end() || it->second.empty()) {
    throw Error(ErrorCode::Validation, "missing query parameter '" + name + "'", name);
  }
  return it->second;
}

Date date_param(const std::map<std::string, std::string>& params,
                const std::string& name) {
  const auto d = parse_date(param(params, name));
  if (!d) {
    throw Error(ErrorCode::Validation, "'" + name + "' must be a YYYY-MM-DD date", name);
  }
  return *d;
}

}  // namespace

ApiService::ApiService(TrackStore store, std::size_t cache_capacity)
    : store_(std::move(store)), cache_(cache_capacity) {}

ApiService::Reply ApiService::health() const {
  return {200, json{{"status", "ok"}, {"flights", store_.size()}}.dump()};
}

ApiService::Reply ApiService::flights(
    const std::map<std::string, std::string>& params) const {
  try {
    TrackQuery q;
    q.origin = param(params, "origin");
    q.destination = param(params, "dest");
    q.date_from = date_param(params, "from");
    q.date_to = date_param(params, "to");
    q.validate();
    json out = json::array();
    for (const auto& f : store_.query(q)) out.push_back(json_io::flight_summary(f));
    return {200, out.dump()};
  } catch (const Error& e) {
    return reply_error(e);
  }
}

ApiService::Reply ApiService::cluster(std::string_view body) {
  try {
    const json parsed = json::parse(body, nullptr, false);
    if (parsed.is_discarded()) {
      throw Error(ErrorCode::Validation, "request body is not valid JSON", "body");
    }
    const ClusterRequest request = json_io::parse_cluster_request(parsed);
    const ClusterOutcome outcome = run_cluster(store_, request, &cache_);
    return {200, json_io::to_json(outcome, request).dump()};
  } catch (const Error& e) {
    return reply_error(e);
  }
}

void ApiService::mount(httplib::Server& server) {
  auto send = [](httplib::Response& res, const Reply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  server.Get("/api/health", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, health());
  });
  server.Get("/api/flights",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               std::map<std::string, std::string> params;
               for (const auto& [k, v] : req.params) params.emplace(k, v);
               send(res, flights(params));
             });
  server.Post("/api/cluster",
              [this, send](const httplib::Request& req, httplib::Response& res) {
                send(res, cluster(req.body));
              });
}

}  // namespace flightclust

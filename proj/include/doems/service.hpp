#pragma once
// Read-only HTTP query service over catalogs loaded from disk.

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doems/catalog.hpp"

namespace httplib {
class Server;
}

namespace doems {

struct ApiConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path catalog_dir = default_catalog_dir();
  // Empty means every pN nM.jsonl file found in catalog_dir.
  std::vector<std::pair<unsigned, std::size_t>> layers;
  // Value of Access-Control-Allow-Origin; empty disables CORS headers.
  std::string cors_origin;
};

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
};

// Immutable snapshot of the served catalogs plus request handling.
class CatalogService {
 public:
  explicit CatalogService(std::map<std::pair<unsigned, std::size_t>, Catalog> catalogs);
  static CatalogService load(const ApiConfig& config);

  // params are decoded query parameters; body is the raw request body.
  ApiResponse handle(const std::string& method, const std::string& path,
                     const std::multimap<std::string, std::string>& params,
                     const std::string& body) const;

  const std::map<std::pair<unsigned, std::size_t>, Catalog>& catalogs() const noexcept {
    return catalogs_;
  }

 private:
  std::map<std::pair<unsigned, std::size_t>, Catalog> catalogs_;
};

// Registers every route on the server.
void install_routes(httplib::Server& server, const CatalogService& service,
                    const std::string& cors_origin);

// Blocks until the server stops.
void serve(const ApiConfig& config);

}  // namespace doems

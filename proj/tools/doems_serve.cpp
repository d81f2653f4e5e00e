#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "doems/service.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Read-only HTTP query service over built catalogs", "doems-serve"};
  doems::ApiConfig config;
  std::string dir;
  std::vector<std::string> layers;
  app.add_option("--host", config.host, "Bind address")->capture_default_str();
  app.add_option("--port", config.port, "Port")->capture_default_str();
  app.add_option("--catalog-dir", dir, "Catalog directory (default $DOEMS_CATALOG_DIR)");
  app.add_option("--layer", layers, "Serve only this layer, as p,n (repeatable)");
  app.add_option("--cors-origin", config.cors_origin, "Allowed cross-origin client");
  CLI11_PARSE(app, argc, argv);

  if (!dir.empty()) config.catalog_dir = dir;
  try {
    for (const std::string& layer : layers) {
      const auto comma = layer.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("layer must be p,n: " + layer);
      config.layers.emplace_back(std::stoul(layer.substr(0, comma)),
                                 std::stoul(layer.substr(comma + 1)));
    }
    std::cerr << "serving " << config.catalog_dir.string() << " on " << config.host << ":"
              << config.port << '\n';
    doems::serve(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

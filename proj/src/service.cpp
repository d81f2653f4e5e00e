#include "doems/service.hpp"

#include <regex>

#include <httplib.h>

#include "doems/errors.hpp"
#include "doems/json_io.hpp"

namespace doems {

namespace {

using Params = std::multimap<std::string, std::string>;

ApiResponse json_response(int status, const ojson& body) { return {status, body.dump()}; }

ApiResponse error_response(int status, const std::string& message) {
  return json_response(status, ojson{{"error", message}});
}

std::string param(const Params& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw InvalidArgument("missing query parameter '" + key + "'");
  return it->second;
}

std::optional<std::string> optional_param(const Params& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

std::size_t to_size(const std::string& text, const std::string& key) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw ParseError("parameter '" + key + "' is not a number");
  return value;
}

const Catalog& find_catalog(const std::map<std::pair<unsigned, std::size_t>, Catalog>& catalogs,
                            unsigned p, std::size_t n) {
  const auto it = catalogs.find({p, n});
  if (it == catalogs.end()) {
    throw NotFound("layer p=" + std::to_string(p) + " n=" + std::to_string(n) + " is not served");
  }
  return it->second;
}

const std::regex& dataset_route() {
  static const std::regex re(R"(/v1/datasets/([^/]+))");
  return re;
}

}  // namespace

CatalogService::CatalogService(std::map<std::pair<unsigned, std::size_t>, Catalog> catalogs)
    : catalogs_(std::move(catalogs)) {}

CatalogService CatalogService::load(const ApiConfig& config) {
  std::map<std::pair<unsigned, std::size_t>, Catalog> catalogs;
  if (!config.layers.empty()) {
    for (const auto& [p, n] : config.layers) {
      catalogs.emplace(std::make_pair(p, n), load_catalog(config.catalog_dir, p, n));
    }
    return CatalogService(std::move(catalogs));
  }
  if (!std::filesystem::is_directory(config.catalog_dir)) {
    throw NotFound("catalog directory " + config.catalog_dir.string() + " not found");
  }
  static const std::regex name(R"(p(\d+)n(\d+)\.jsonl)");
  for (const auto& entry : std::filesystem::directory_iterator(config.catalog_dir)) {
    std::smatch match;
    const std::string file = entry.path().filename().string();
    if (!std::regex_match(file, match, name)) continue;
    Catalog catalog = import_catalog(entry.path());
    catalogs.emplace(std::make_pair(catalog.p(), catalog.n()), std::move(catalog));
  }
  return CatalogService(std::move(catalogs));
}

ApiResponse CatalogService::handle(const std::string& method, const std::string& path,
                                   const Params& params, const std::string& body) const {
  try {
    if (method == "GET" && path == "/healthz") return json_response(200, ojson{{"status", "ok"}});

    if (method == "GET" && path == "/v1/layers") {
      ojson layers = ojson::array();
      for (const auto& [key, catalog] : catalogs_) {
        for (std::size_t m : catalog.layer_sizes()) {
          layers.push_back(ojson{{"p", key.first},
                                 {"n", key.second},
                                 {"m", m},
                                 {"record_count", catalog.layer(m).size()}});
        }
      }
      return json_response(200, ojson{{"layers", std::move(layers)}});
    }

    if (method == "GET" && (path == "/v1/classes" || path == "/v1/summary")) {
      const auto p = static_cast<unsigned>(to_size(param(params, "p"), "p"));
      const std::size_t n = to_size(param(params, "n"), "n");
      const std::size_t m = to_size(param(params, "m"), "m");
      const Catalog& catalog = find_catalog(catalogs_, p, n);
      if (!catalog.has_layer(m)) throw NotFound("layer m=" + std::to_string(m) + " is not served");
      if (path == "/v1/summary") return json_response(200, to_json(class_summary(catalog, m)));

      QueryFilter filter;
      filter.m = m;
      if (auto mono = optional_param(params, "contains_monomial")) {
        filter.contains_monomial = parse_monomial(*mono, n);
      }
      filter.classlabel = optional_param(params, "classlabel");
      const auto records = query(catalog, filter);
      ojson out{{"p", p}, {"n", n}, {"m", m}, {"record_count", records.size()}};
      if (records.empty()) {
        out["class_count"] = 0;
        out["classes"] = ojson::array();
      } else {
        const ojson stats = to_json(summarize(records));
        out["class_count"] = stats["class_count"];
        out["classes"] = stats["classes"];
      }
      return json_response(200, out);
    }

    std::smatch match;
    if (method == "GET" && std::regex_match(path, match, dataset_route())) {
      const auto p = static_cast<unsigned>(to_size(param(params, "p"), "p"));
      const std::size_t n = to_size(param(params, "n"), "n");
      const Catalog& catalog = find_catalog(catalogs_, p, n);
      const DataSet data = parse_dataset(match[1].str(), FieldSpec(p), n);
      const CatalogRecord* record = catalog.find(data);
      if (!record) throw NotFound("data set " + to_string(data) + " is not in the catalog");
      return json_response(200, to_json(*record));
    }

    if (method == "POST" && path == "/v1/whatif") {
      ojson request;
      try {
        request = ojson::parse(body);
      } catch (const std::exception& e) {
        throw ParseError(std::string("request body is not JSON: ") + e.what());
      }
      std::optional<unsigned> p;
      std::optional<std::size_t> n;
      std::string dataset;
      std::string point;
      try {
        dataset = request.at("dataset").get<std::string>();
        point = request.at("add_point").get<std::string>();
        if (request.contains("p")) p = request.at("p").get<unsigned>();
        if (request.contains("n")) n = request.at("n").get<std::size_t>();
      } catch (const ojson::exception& e) {
        throw ParseError(std::string("malformed whatif request: ") + e.what());
      }
      // Without explicit p and n, the point length fixes n and p must be unambiguous.
      if (!n) n = point.size();
      if (!p) {
        for (const auto& [key, catalog] : catalogs_) {
          if (key.second != *n) continue;
          if (p) throw InvalidArgument("several layers match; pass p");
          p = key.first;
        }
        if (!p) throw NotFound("no served layer has n=" + std::to_string(*n));
      }
      const Catalog& catalog = find_catalog(catalogs_, *p, *n);
      const FieldSpec field(*p);
      const WhatIfResult result = whatif_add_point(parse_dataset(dataset, field, *n),
                                                   parse_point(point, field, *n), &catalog);
      return json_response(200, to_json(result));
    }

    return error_response(404, "no route for " + method + " " + path);
  } catch (const DuplicatePoint& e) {
    return error_response(409, e.what());
  } catch (const NotFound& e) {
    return error_response(404, e.what());
  } catch (const ParseError& e) {
    return error_response(400, e.what());
  } catch (const InvalidArgument& e) {
    return error_response(400, e.what());
  } catch (const UnsupportedParameters& e) {
    return error_response(400, e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

void install_routes(httplib::Server& server, const CatalogService& service,
                    const std::string& cors_origin) {
  auto dispatch = [&service, cors_origin](const httplib::Request& req, httplib::Response& res) {
    Params params(req.params.begin(), req.params.end());
    const ApiResponse out = service.handle(req.method, req.path, params, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
    if (!cors_origin.empty()) res.set_header("Access-Control-Allow-Origin", cors_origin);
  };
  server.Get(R"(/healthz)", dispatch);
  server.Get(R"(/v1/.*)", dispatch);
  server.Post(R"(/v1/.*)", dispatch);
  server.Options(R"(.*)", [cors_origin](const httplib::Request&, httplib::Response& res) {
    if (!cors_origin.empty()) {
      res.set_header("Access-Control-Allow-Origin", cors_origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
    res.status = 204;
  });
}

void serve(const ApiConfig& config) {
  const CatalogService service = CatalogService::load(config);
  httplib::Server server;
  install_routes(server, service, config.cors_origin);
  if (!server.listen(config.host, config.port)) {
    throw std::runtime_error("cannot listen on " + config.host + ":" + std::to_string(config.port));
  }
}

}  // namespace doems

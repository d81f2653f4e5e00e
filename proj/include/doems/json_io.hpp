#pragma once
// Structured-text views of library results shared by the CLI and the service.
// Field names match the catalog export schema.

#include <span>

#include <json.hpp>

#include "doems/catalog.hpp"
#include "doems/ideals.hpp"

namespace doems {

using ojson = nlohmann::ordered_json;

ojson to_json(const CatalogRecord& record);
ojson to_json(const SummaryStats& stats);
ojson to_json(const WhatIfResult& result);
ojson to_json(const VerificationReport& report);
ojson to_json(const DataSet& data, const GroebnerResult& result);
ojson to_json(const DataSet& data, std::span<const BasisAnnotation> bases);

}  // namespace doems

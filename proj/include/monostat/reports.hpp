#pragma once

#include <string>

#include <json.hpp>

#include "monostat/catalog.hpp"
#include "monostat/config.hpp"
#include "monostat/metrics.hpp"
#include "monostat/optimizer.hpp"
#include "monostat/oracle.hpp"

namespace monostat {

// Insertion-ordered JSON keeps report bytes stable across identical runs.
using Json = nlohmann::ordered_json;

Json to_json(const RunConfig& config);
Json to_json(const SurfaceSpec& spec);
Json to_json(const ECSReport& report);
Json to_json(const MetricsReport& metrics);
Json to_json(const std::vector<SweepRow>& rows);
Json to_json(const FeasibilityMap& map);
Json to_json(const OptimizationResult& result);
Json to_json(const CatalogEntry& entry);
Json to_json(const CatalogReport& report);

// Wraps the payload with a schema_version field and writes pretty JSON.
void write_report(const Json& payload, const std::string& path);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string map_csv(const FeasibilityMap& map);

void write_text(const std::string& text, const std::string& path);

} // namespace monostat

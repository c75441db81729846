#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "kosnet/enrichment.hpp"
#include "kosnet/ingest.hpp"
#include "kosnet/kos.hpp"
#include "kosnet/recommender.hpp"

namespace kosnet {

struct PipelineConfig {
    std::filesystem::path data_path;
    std::filesystem::path kos_path;
    std::filesystem::path output_dir;
    EnrichConfig enrich;
    RecommendOptions recommend;

    /// Throws ConfigError on unreadable inputs or out-of-range numbers.
    void validate() const;
};

/// Parses flat `key = value` lines (`#` starts a comment line). Throws ConfigError.
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// Applies recognised keys onto `cfg`; unknown keys and malformed values throw ConfigError.
void apply_config(const std::map<std::string, std::string>& values, PipelineConfig& cfg);

/// Throws ConfigError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

struct Dataset {
    Catalog catalog;
    KosIndex kos;
};

/// Reads, parses and validates both snapshots. ParseError carries the file name.
Dataset load_dataset(const std::filesystem::path& data_path, const std::filesystem::path& kos_path);

/// Summary counters and merged warnings for a dataset.
nlohmann::json dataset_summary(const Dataset& ds);

/// Everything `report.json` holds.
nlohmann::json build_report(const Dataset& ds, const PipelineConfig& cfg);

/// Writes report.json, authors.dot, orgs.dot and countries.dot into cfg.output_dir.
void run_pipeline(const PipelineConfig& cfg);

}  // namespace kosnet

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kosnet/communities.hpp"
#include "kosnet/graph.hpp"
#include "kosnet/query.hpp"
#include "kosnet/recommender.hpp"

namespace kosnet {

enum class GraphFormat { Dot, Json };

/// Byte-deterministic rendering. DOT lists nodes then edges in id order with
/// `[weight=N]`; JSON is `{"edges":[{"a","b","w"}...],"nodes":[...]}`.
std::string export_graph(const WeightedGraph& g, GraphFormat format);

/// Pretty-printed JSON with keys in byte order, floats as fixed 6-decimal
/// numbers and a trailing newline.
std::string dump_canonical(const nlohmann::json& value);

nlohmann::json to_json(const WeightedGraph& g);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const TopicCommunity& t);
nlohmann::json to_json(const std::vector<Recommendation>& recs);
nlohmann::json to_json(const AreaQueryResult& r);
nlohmann::json to_json(const std::vector<AuthorKeywords>& rows);
nlohmann::json to_json(const std::vector<KeywordTops>& rows);

}  // namespace kosnet

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kosnet/ingest.hpp"
#include "kosnet/types.hpp"

namespace kosnet {

/// Author IRI, org IRI or country code.
using NodeId = std::string;

/// Undirected graph with positive integer edge weights. Each edge is stored
/// once under (min, max); self-loops are rejected.
class WeightedGraph {
public:
    using Edge = std::pair<NodeId, NodeId>;

    void add_node(const NodeId& n) { nodes_.insert(n); }
    /// Adds both endpoints and increments the edge by `w` (>= 1).
    void add_edge(const NodeId& a, const NodeId& b, int w = 1);

    /// Zero when there is no edge. Symmetric in its arguments.
    int weight(const NodeId& a, const NodeId& b) const;
    bool has_node(const NodeId& n) const { return nodes_.contains(n); }

    const std::set<NodeId>& nodes() const { return nodes_; }
    const std::map<Edge, int>& edges() const { return edges_; }

    /// Neighbour -> weight for every node, built on demand.
    std::map<NodeId, std::map<NodeId, int>> adjacency() const;

    /// Subgraph induced by `keep` (nodes outside the graph are ignored).
    WeightedGraph induced(const std::set<NodeId>& keep) const;

    bool operator==(const WeightedGraph&) const = default;

private:
    std::set<NodeId> nodes_;
    std::map<Edge, int> edges_;
};

/// Nodes are all authors; each paper adds 1 to every unordered author pair.
WeightedGraph coauthorship_graph(const Catalog& cat);

enum class AggregationLevel { Institution, Country };

/// Edge weight between X != Y is the number of distinct papers with at least
/// one author in X and one in Y. Authors without an org ("author_without_affiliation")
/// or orgs without a country ("org_without_country") are skipped and counted
/// once per author.
WeightedGraph aggregate_graph(const Catalog& cat, AggregationLevel level, Warnings* warnings = nullptr);

}  // namespace kosnet

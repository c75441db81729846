#include "kosnet/graph.hpp"

#include <optional>
#include <stdexcept>

namespace kosnet {

void WeightedGraph::add_edge(const NodeId& a, const NodeId& b, int w) {
    if (a == b) throw std::invalid_argument("self-loop on " + a);
    if (w < 1) throw std::invalid_argument("edge weight must be >= 1");
    nodes_.insert(a);
    nodes_.insert(b);
    edges_[a < b ? Edge{a, b} : Edge{b, a}] += w;
}

int WeightedGraph::weight(const NodeId& a, const NodeId& b) const {
    auto it = edges_.find(a < b ? Edge{a, b} : Edge{b, a});
    return it == edges_.end() ? 0 : it->second;
}

std::map<NodeId, std::map<NodeId, int>> WeightedGraph::adjacency() const {
    std::map<NodeId, std::map<NodeId, int>> adj;
    for (const NodeId& n : nodes_) adj[n];
    for (const auto& [e, w] : edges_) {
        adj[e.first][e.second] = w;
        adj[e.second][e.first] = w;
    }
    return adj;
}

WeightedGraph WeightedGraph::induced(const std::set<NodeId>& keep) const {
    WeightedGraph g;
    for (const NodeId& n : keep)
        if (has_node(n)) g.add_node(n);
    for (const auto& [e, w] : edges_)
        if (keep.contains(e.first) && keep.contains(e.second)) g.add_edge(e.first, e.second, w);
    return g;
}

WeightedGraph coauthorship_graph(const Catalog& cat) {
    WeightedGraph g;
    for (const auto& [iri, _] : cat.authors) g.add_node(iri);
    for (const auto& [_, paper] : cat.papers) {
        for (auto a = paper.author_iris.begin(); a != paper.author_iris.end(); ++a)
            for (auto b = std::next(a); b != paper.author_iris.end(); ++b) g.add_edge(*a, *b);
    }
    return g;
}

WeightedGraph aggregate_graph(const Catalog& cat, AggregationLevel level, Warnings* warnings) {
    std::set<Iri> unaffiliated, countryless;

    auto group_of = [&](const Iri& author) -> std::optional<NodeId> {
        const AuthorRecord& a = cat.authors.at(author);
        if (!a.org_iri) {
            unaffiliated.insert(author);
            return std::nullopt;
        }
        if (level == AggregationLevel::Institution) return *a.org_iri;
        const OrgRecord& org = cat.orgs.at(*a.org_iri);
        if (!org.country) {
            countryless.insert(author);
            return std::nullopt;
        }
        return *org.country;
    };

    WeightedGraph g;
    for (const auto& [_, paper] : cat.papers) {
        std::set<NodeId> groups;
        for (const Iri& a : paper.author_iris)
            if (auto group = group_of(a)) groups.insert(*group);
        for (const NodeId& n : groups) g.add_node(n);
        for (auto x = groups.begin(); x != groups.end(); ++x)
            for (auto y = std::next(x); y != groups.end(); ++y) g.add_edge(*x, *y);
    }
    add_warning(warnings, "author_without_affiliation", unaffiliated.size());
    add_warning(warnings, "org_without_country", countryless.size());
    return g;
}

}  // namespace kosnet

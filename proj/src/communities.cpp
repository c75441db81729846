#include "kosnet/communities.hpp"

#include <vector>

#include "kosnet/error.hpp"

namespace kosnet {

namespace {

/// Relabels every group by its smallest member.
Partition canonical(const std::map<NodeId, NodeId>& raw) {
    std::map<NodeId, NodeId> smallest;
    for (const auto& [node, label] : raw) smallest.try_emplace(label, node);  // nodes arrive in ascending order
    Partition p;
    for (const auto& [node, label] : raw) p.assignment[node] = smallest.at(label);
    return p;
}

}  // namespace

std::map<NodeId, std::set<NodeId>> Partition::communities() const {
    std::map<NodeId, std::set<NodeId>> out;
    for (const auto& [node, label] : assignment) out[label].insert(node);
    return out;
}

Partition connected_components(const WeightedGraph& g) {
    const auto adj = g.adjacency();
    std::map<NodeId, NodeId> label;
    for (const NodeId& root : g.nodes()) {
        if (label.contains(root)) continue;
        // Ascending iteration makes `root` the smallest id of its component.
        std::vector<NodeId> stack{root};
        label[root] = root;
        while (!stack.empty()) {
            const NodeId n = std::move(stack.back());
            stack.pop_back();
            for (const auto& [m, _] : adj.at(n))
                if (label.try_emplace(m, root).second) stack.push_back(m);
        }
    }
    return Partition{std::move(label), true};
}

Partition label_propagation(const WeightedGraph& g, int max_iters) {
    if (max_iters < 1) throw ConfigError("max_iters must be >= 1");
    const auto adj = g.adjacency();
    std::map<NodeId, NodeId> label;
    for (const NodeId& n : g.nodes()) label[n] = n;

    bool converged = false;
    for (int iter = 0; iter < max_iters && !converged; ++iter) {
        converged = true;
        for (const NodeId& n : g.nodes()) {
            const auto& neighbours = adj.at(n);
            if (neighbours.empty()) continue;
            std::map<NodeId, long long> score;
            for (const auto& [m, w] : neighbours) score[label.at(m)] += w;
            // Strict > keeps the smallest label among equal scores.
            auto best = score.begin();
            for (auto it = score.begin(); it != score.end(); ++it)
                if (it->second > best->second) best = it;
            if (best->first != label[n]) {
                label[n] = best->first;
                converged = false;
            }
        }
    }
    Partition p = canonical(label);
    p.converged = converged;
    return p;
}

TopicCommunity topic_community(const Catalog& cat, const KosIndex& k, const std::map<Iri, ConceptProfile>& profiles,
                               const WeightedGraph& g, const Iri& topic) {
    const IriSet area = narrower_closure(k, topic);
    TopicCommunity out;
    for (const auto& [author, profile] : profiles) {
        if (!cat.authors.contains(author)) continue;
        for (const Iri& c : area) {
            auto it = profile.weights.find(c);
            if (it != profile.weights.end() && it->second > 0.0) {
                out.members.insert(author);
                break;
            }
        }
    }
    WeightedGraph sub = g.induced(out.members);
    for (const Iri& m : out.members) sub.add_node(m);
    out.partition = connected_components(sub);
    return out;
}

}  // namespace kosnet

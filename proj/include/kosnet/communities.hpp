#pragma once

#include <map>
#include <vector>

#include "kosnet/enrichment.hpp"
#include "kosnet/graph.hpp"
#include "kosnet/kos.hpp"

namespace kosnet {

/// Node -> community label, where a label is the smallest node id of its community.
struct Partition {
    std::map<NodeId, NodeId> assignment;
    /// False when label propagation stopped at max_iters without a fixpoint.
    bool converged = true;

    /// Label -> members, both in id order.
    std::map<NodeId, std::set<NodeId>> communities() const;
    std::size_t size() const { return communities().size(); }

    bool operator==(const Partition&) const = default;
};

Partition connected_components(const WeightedGraph& g);

/// Asynchronous label propagation with a fixed schedule: nodes are visited in
/// ascending id order and adopt the neighbour label of largest summed edge
/// weight, smallest label on ties. Isolated nodes keep their own label.
Partition label_propagation(const WeightedGraph& g, int max_iters = 100);

struct TopicCommunity {
    std::set<Iri> members;
    Partition partition;
};

/// Authors whose profile puts weight > 0 on any concept under `topic`,
/// partitioned into connected components of the induced co-authorship subgraph.
/// Throws UnknownConcept.
TopicCommunity topic_community(const Catalog& cat, const KosIndex& k, const std::map<Iri, ConceptProfile>& profiles,
                               const WeightedGraph& g, const Iri& topic);

}  // namespace kosnet

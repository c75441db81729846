#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kosnet/enrichment.hpp"
#include "kosnet/graph.hpp"

namespace kosnet {

struct SharedConcept {
    Iri concept_iri;
    /// min(p_c, q_c)
    double weight = 0.0;
    bool operator==(const SharedConcept&) const = default;
};

struct Recommendation {
    Iri author_a;  // author_a < author_b
    Iri author_b;
    double score = 0.0;
    /// Sorted by weight descending, then IRI.
    std::vector<SharedConcept> shared_concepts;
    bool operator==(const Recommendation&) const = default;
};

/// Weighted Jaccard: sum of termwise minima over sum of termwise maxima; 0 when both are empty.
double profile_similarity(const ConceptWeights& p, const ConceptWeights& q);
inline double profile_similarity(const ConceptProfile& p, const ConceptProfile& q) {
    return profile_similarity(p.weights, q.weights);
}

std::vector<SharedConcept> shared_concepts(const ConceptWeights& p, const ConceptWeights& q);

struct RecommendOptions {
    int top_k = 20;
    double min_score = 0.05;

    /// Throws ConfigError unless top_k >= 0 and 0 <= min_score <= 1.
    void validate() const;
};

/// Ranks every unordered pair of catalog authors that shares no edge in `g`
/// by profile similarity: score descending, then (a, b). Pairs under
/// min_score are dropped and the list is cut at top_k. Authors missing from
/// `profiles` have an empty profile.
std::vector<Recommendation> recommend_pairs(const Catalog& cat, const WeightedGraph& g,
                                            const std::map<Iri, ConceptProfile>& profiles,
                                            const RecommendOptions& opts);

}  // namespace kosnet

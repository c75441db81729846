#include "kosnet/recommender.hpp"

#include <algorithm>
#include <cmath>

#include "kosnet/error.hpp"

namespace kosnet {

namespace {

/// Walks the union of two sorted supports, calling f(concept, p_c, q_c).
template <typename F>
void merge_walk(const ConceptWeights& p, const ConceptWeights& q, F f) {
    auto i = p.begin();
    auto j = q.begin();
    while (i != p.end() || j != q.end()) {
        if (j == q.end() || (i != p.end() && i->first < j->first)) {
            f(i->first, i->second, 0.0);
            ++i;
        } else if (i == p.end() || j->first < i->first) {
            f(j->first, 0.0, j->second);
            ++j;
        } else {
            f(i->first, i->second, j->second);
            ++i;
            ++j;
        }
    }
}

const ConceptWeights kNoWeights;

}  // namespace

double profile_similarity(const ConceptWeights& p, const ConceptWeights& q) {
    double num = 0.0;
    double den = 0.0;
    merge_walk(p, q, [&](const Iri&, double a, double b) {
        num += std::min(a, b);
        den += std::max(a, b);
    });
    return den > 0.0 ? num / den : 0.0;
}

std::vector<SharedConcept> shared_concepts(const ConceptWeights& p, const ConceptWeights& q) {
    std::vector<SharedConcept> out;
    merge_walk(p, q, [&](const Iri& c, double a, double b) {
        const double m = std::min(a, b);
        if (m > 0.0) out.push_back({c, m});
    });
    std::stable_sort(out.begin(), out.end(),
                     [](const SharedConcept& x, const SharedConcept& y) { return x.weight > y.weight; });
    return out;
}

void RecommendOptions::validate() const {
    if (top_k < 0) throw ConfigError("top_k must be >= 0");
    if (!(min_score >= 0.0 && min_score <= 1.0)) throw ConfigError("min_score must lie in [0, 1]");
}

std::vector<Recommendation> recommend_pairs(const Catalog& cat, const WeightedGraph& g,
                                            const std::map<Iri, ConceptProfile>& profiles,
                                            const RecommendOptions& opts) {
    opts.validate();
    std::vector<Recommendation> out;
    if (opts.top_k == 0) return out;

    auto weights_of = [&](const Iri& a) -> const ConceptWeights& {
        auto it = profiles.find(a);
        return it == profiles.end() ? kNoWeights : it->second.weights;
    };

    for (auto a = cat.authors.begin(); a != cat.authors.end(); ++a) {
        const ConceptWeights& p = weights_of(a->first);
        for (auto b = std::next(a); b != cat.authors.end(); ++b) {
            if (g.weight(a->first, b->first) > 0) continue;
            const ConceptWeights& q = weights_of(b->first);
            const double score = profile_similarity(p, q);
            if (score < opts.min_score) continue;
            out.push_back({a->first, b->first, score, shared_concepts(p, q)});
        }
    }
    // Pairs are generated in (a, b) order, so a stable sort on score alone
    // leaves ties in lexicographic order.
    std::stable_sort(out.begin(), out.end(),
                     [](const Recommendation& x, const Recommendation& y) { return x.score > y.score; });
    if (out.size() > static_cast<std::size_t>(opts.top_k)) out.resize(static_cast<std::size_t>(opts.top_k));
    return out;
}

}  // namespace kosnet

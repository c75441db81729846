#include "kosnet/enrichment.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "kosnet/error.hpp"
#include "kosnet/keyword.hpp"

namespace kosnet {

namespace {

void raise_to(ConceptWeights& w, const Iri& c, double value) {
    auto [it, inserted] = w.try_emplace(c, value);
    if (!inserted) it->second = std::max(it->second, value);
}

void accumulate(ConceptWeights& into, const ConceptWeights& from) {
    for (const auto& [c, w] : from) into[c] += w;
}

/// Signature for a keyword, or nothing when its key is empty.
const ConceptSignature* cached_signature(std::map<std::string, std::optional<ConceptSignature>>& cache,
                                         const KosIndex& k, const EnrichConfig& cfg, const std::string& keyword) {
    auto [it, inserted] = cache.try_emplace(keyword);
    if (inserted) {
        try {
            it->second = enrich_keyword(k, cfg, keyword);
        } catch (const EmptyKey&) {
        }
    }
    return it->second ? &*it->second : nullptr;
}

}  // namespace

void EnrichConfig::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(w_direct) || !finite(w_related) || !finite(w_broader))
        throw ConfigError("enrichment weights must be finite");
    if (!(w_direct > 0.0)) throw ConfigError("w_direct must be > 0");
    if (!(w_direct >= w_related && w_related >= w_broader && w_broader >= 0.0))
        throw ConfigError("weights must satisfy w_direct >= w_related >= w_broader >= 0");
}

ConceptSignature enrich_keyword(const KosIndex& k, const EnrichConfig& cfg, std::string_view keyword) {
    const Resolution r = resolve_keyword(k, keyword);
    ConceptSignature sig;
    sig.weights[r.concept_iri] = cfg.w_direct;
    if (!r.resolved || !cfg.enrichment_enabled) return sig;

    for (const Iri& rel : related_of(k, r.concept_iri)) raise_to(sig.weights, rel, cfg.w_related);
    for (const Iri& up : broader_closure(k, r.concept_iri))
        if (up != r.concept_iri) raise_to(sig.weights, up, cfg.w_broader);
    return sig;
}

ConceptProfile author_profile(const Catalog& cat, const KosIndex& k, const EnrichConfig& cfg, const Iri& author) {
    if (!cat.authors.contains(author)) throw UnknownAuthor(author);
    ConceptProfile profile{author, {}};
    std::map<std::string, std::optional<ConceptSignature>> cache;
    for (const Iri& paper : cat.papers_of(author))
        for (const std::string& kw : cat.papers.at(paper).keywords)
            if (const auto* sig = cached_signature(cache, k, cfg, kw)) accumulate(profile.weights, sig->weights);
    return profile;
}

std::map<Iri, ConceptProfile> all_profiles(const Catalog& cat, const KosIndex& k, const EnrichConfig& cfg) {
    std::map<Iri, ConceptProfile> out;
    for (const auto& [iri, _] : cat.authors) out[iri].author = iri;
    std::map<std::string, std::optional<ConceptSignature>> cache;
    // Same (paper, keyword) order per author as author_profile, so sums are bit-identical.
    for (const auto& [_, paper] : cat.papers)
        for (const std::string& kw : paper.keywords)
            if (const auto* sig = cached_signature(cache, k, cfg, kw))
                for (const Iri& a : paper.author_iris) accumulate(out[a].weights, sig->weights);
    return out;
}

}  // namespace kosnet

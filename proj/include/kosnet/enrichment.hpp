#pragma once

#include <map>

#include "kosnet/ingest.hpp"
#include "kosnet/kos.hpp"
#include "kosnet/types.hpp"

namespace kosnet {

/// Concept -> weight. Absent keys weigh zero.
using ConceptWeights = std::map<Iri, double>;

struct ConceptSignature {
    ConceptWeights weights;
    bool operator==(const ConceptSignature&) const = default;
};

struct ConceptProfile {
    Iri author;
    ConceptWeights weights;
    bool operator==(const ConceptProfile&) const = default;
};

struct EnrichConfig {
    double w_direct = 1.0;
    double w_related = 0.5;
    double w_broader = 0.25;
    bool enrichment_enabled = true;

    /// Throws ConfigError unless w_direct >= w_related >= w_broader >= 0 and w_direct > 0.
    void validate() const;
};

/// Direct concept plus its one-step related neighbours and all broader
/// ancestors. A concept reached by several routes keeps its largest weight.
/// Pseudo-concepts and disabled enrichment yield the direct concept only.
ConceptSignature enrich_keyword(const KosIndex& k, const EnrichConfig& cfg, std::string_view keyword);

/// Sum of keyword signatures over every paper of the author. Keywords with an
/// empty normalized key carry no concept and are skipped.
ConceptProfile author_profile(const Catalog& cat, const KosIndex& k, const EnrichConfig& cfg, const Iri& author);

/// Profiles for every author in the catalog.
std::map<Iri, ConceptProfile> all_profiles(const Catalog& cat, const KosIndex& k, const EnrichConfig& cfg);

}  // namespace kosnet

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kosnet/ingest.hpp"
#include "kosnet/kos.hpp"

namespace kosnet {

struct AreaQueryResult {
    Iri concept_iri;
    /// narrower_closure(concept_iri)
    IriSet expanded;
    IriSet papers;
};

/// Papers carrying at least one keyword that resolves into the narrower closure
/// of `area`. Throws UnknownConcept.
AreaQueryResult papers_by_area(const Catalog& cat, const KosIndex& k, const Iri& area);

struct AuthorKeywords {
    Iri author;
    /// First-seen order over papers (IRI order) and their keywords, deduplicated.
    std::vector<std::string> keywords;
    bool operator==(const AuthorKeywords&) const = default;
};

/// One row per distinct author of `papers`, sorted by author. Throws UnknownPaper.
std::vector<AuthorKeywords> authors_and_keywords_of(const Catalog& cat, const IriSet& papers);

struct KeywordTops {
    std::string keyword;
    IriSet tops;
    bool operator==(const KeywordTops&) const = default;
};

/// Top concepts per keyword; unresolved keywords get an empty set. Throws EmptyKey.
std::vector<KeywordTops> tops_of_keywords(const KosIndex& k, const std::vector<std::string>& keywords);

}  // namespace kosnet

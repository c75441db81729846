#pragma once

#include <map>
#include <string>

#include "kosnet/ingest.hpp"
#include "kosnet/types.hpp"

namespace kosnet {

struct Concept {
    Iri iri;
    std::string pref_label;
    std::set<std::string> alt_labels;
    IriSet broader;
    IriSet related;  // symmetric, never contains iri
    bool is_top = false;

    bool operator==(const Concept&) const = default;
};

/// Immutable concept scheme with label and hierarchy indices.
class KosIndex {
public:
    KosIndex() = default;

    const std::map<Iri, Concept>& concepts() const { return concepts_; }
    const std::map<std::string, IriSet>& label_index() const { return label_index_; }
    const Warnings& warnings() const { return warnings_; }

    bool contains(const Iri& iri) const { return concepts_.contains(iri); }
    /// Throws UnknownConcept.
    const Concept& at(const Iri& iri) const;
    /// One-step narrower neighbours (inverse of broader).
    const IriSet& narrower(const Iri& iri) const;

    bool operator==(const KosIndex& other) const {
        return concepts_ == other.concepts_ && label_index_ == other.label_index_;
    }

private:
    friend KosIndex build_kos(const TripleSet& ts);

    std::map<Iri, Concept> concepts_;
    std::map<Iri, IriSet> narrower_;
    std::map<std::string, IriSet> label_index_;
    Warnings warnings_;
};

/// Assembles concepts from the KOS vocabulary. Throws IntegrityError on a
/// broader/related reference to an undeclared concept or a missing prefLabel.
KosIndex build_kos(const TripleSet& ts);

/// Reflexive-transitive closure over broader edges. Cycles terminate.
IriSet broader_closure(const KosIndex& k, const Iri& c);

/// Reflexive-transitive closure over narrower edges.
IriSet narrower_closure(const KosIndex& k, const Iri& c);

/// Members of broader_closure(c) that are flagged top or have no broader edge.
/// Empty for a concept sitting on a rootless cycle; counted as "concept_without_top".
IriSet top_concepts_of(const KosIndex& k, const Iri& c, Warnings* warnings = nullptr);

IriSet related_of(const KosIndex& k, const Iri& c);

}  // namespace kosnet

#include "kosnet/kos.hpp"

#include <set>
#include <vector>

#include "kosnet/error.hpp"
#include "kosnet/keyword.hpp"

namespace kosnet {

namespace {

const IriSet kEmpty;

template <typename Next>
IriSet closure(const KosIndex& k, const Iri& start, Next next) {
    k.at(start);
    IriSet visited{start};
    std::vector<Iri> stack{start};
    while (!stack.empty()) {
        const Iri current = std::move(stack.back());
        stack.pop_back();
        for (const Iri& n : next(current))
            if (visited.insert(n).second) stack.push_back(n);
    }
    return visited;
}

bool is_top(const Concept& c) { return c.is_top || c.broader.empty(); }

}  // namespace

const Concept& KosIndex::at(const Iri& iri) const {
    auto it = concepts_.find(iri);
    if (it == concepts_.end()) throw UnknownConcept(iri);
    return it->second;
}

const IriSet& KosIndex::narrower(const Iri& iri) const {
    at(iri);
    auto it = narrower_.find(iri);
    return it == narrower_.end() ? kEmpty : it->second;
}

KosIndex build_kos(const TripleSet& ts) {
    KosIndex k;
    const std::set<Triple> unique(ts.triples.begin(), ts.triples.end());

    for (const Triple& t : unique) {
        if (t.predicate != vocab::type) continue;
        if (!t.object_is_iri() || t.object_iri() != vocab::Concept) {
            add_warning(&k.warnings_, "unknown_type");
            continue;
        }
        k.concepts_[t.subject].iri = t.subject;
    }

    auto concept_ref = [&](const Triple& t) -> const Iri& {
        if (!t.object_is_iri()) throw IntegrityError(t.subject, "<" + t.predicate + "> expects an IRI object");
        if (!k.concepts_.contains(t.object_iri()))
            throw IntegrityError(t.object_iri(), "referenced concept is not declared");
        return t.object_iri();
    };
    auto label = [](const Triple& t) -> const std::string& {
        if (t.object_is_iri()) throw IntegrityError(t.subject, "<" + t.predicate + "> expects a literal object");
        return t.object_literal();
    };

    for (const Triple& t : unique) {
        if (t.predicate == vocab::type) continue;
        const bool known = t.predicate == vocab::prefLabel || t.predicate == vocab::altLabel ||
                           t.predicate == vocab::broader || t.predicate == vocab::related ||
                           t.predicate == vocab::topConceptOf;
        if (!known) {
            add_warning(&k.warnings_, "unknown_predicate");
            continue;
        }
        auto it = k.concepts_.find(t.subject);
        if (it == k.concepts_.end()) {
            add_warning(&k.warnings_, "untyped_subject");
            continue;
        }
        Concept& c = it->second;

        if (t.predicate == vocab::prefLabel) {
            const std::string& text = label(t);
            if (!c.pref_label.empty() && c.pref_label != text)
                throw IntegrityError(t.subject, "conflicting prefLabel values");
            c.pref_label = text;
        } else if (t.predicate == vocab::altLabel) {
            c.alt_labels.insert(label(t));
        } else if (t.predicate == vocab::topConceptOf) {
            c.is_top = true;
        } else {
            const Iri& other = concept_ref(t);
            if (other == t.subject) {
                add_warning(&k.warnings_, "self_reference");
                continue;
            }
            if (t.predicate == vocab::broader) {
                c.broader.insert(other);
                k.narrower_[other].insert(t.subject);
            } else {
                c.related.insert(other);
                k.concepts_[other].related.insert(t.subject);
            }
        }
    }

    for (const auto& [iri, c] : k.concepts_) {
        if (c.pref_label.empty()) throw IntegrityError(iri, "concept has no prefLabel");
        auto index = [&](const std::string& text) {
            std::string key = normalize_label(text);
            if (key.empty())
                add_warning(&k.warnings_, "empty_label_key");
            else
                k.label_index_[key].insert(iri);
        };
        index(c.pref_label);
        for (const std::string& alt : c.alt_labels) index(alt);
    }

    for (const auto& [iri, c] : k.concepts_)
        if (top_concepts_of(k, iri).empty()) add_warning(&k.warnings_, "concept_without_top");
    return k;
}

IriSet broader_closure(const KosIndex& k, const Iri& c) {
    return closure(k, c, [&](const Iri& i) -> const IriSet& { return k.at(i).broader; });
}

IriSet narrower_closure(const KosIndex& k, const Iri& c) {
    return closure(k, c, [&](const Iri& i) -> const IriSet& { return k.narrower(i); });
}

IriSet top_concepts_of(const KosIndex& k, const Iri& c, Warnings* warnings) {
    IriSet tops;
    for (const Iri& ancestor : broader_closure(k, c))
        if (is_top(k.at(ancestor))) tops.insert(ancestor);
    if (tops.empty()) add_warning(warnings, "concept_without_top");
    return tops;
}

IriSet related_of(const KosIndex& k, const Iri& c) { return k.at(c).related; }

}  // namespace kosnet

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kosnet/error.hpp"
#include "kosnet/kos.hpp"
#include "support/oracles.hpp"
#include "support/support.hpp"

using namespace kosnet;
using namespace kosnet::testing;

namespace {

KosIndex chain() {
    // OCW -> E-Learning -> Education, related(OCW) = {OER}
    return build_kos(scheme({"OCW", "ELearning", "Education", "OER"}, {{"OCW", "ELearning"}, {"ELearning", "Education"}},
                            {{"OCW", "OER"}}));
}

IriSet ids(std::initializer_list<const char*> names) {
    IriSet out;
    for (const char* n : names) out.insert(kos(n));
    return out;
}

}  // namespace

TEST_CASE("label index covers pref and alt labels") {
    const KosIndex k = build_kos(to_set({
        ref(kos("C"), vocab::type, vocab::Concept),
        lit(kos("C"), vocab::prefLabel, "OpenCourseWare"),
        lit(kos("C"), vocab::altLabel, "OCW"),
    }));
    CHECK(k.label_index().at("opencourseware") == IriSet{kos("C")});
    CHECK(k.label_index().at("ocw") == IriSet{kos("C")});
    CHECK(k.label_index().size() == 2);
}

TEST_CASE("build_kos errors and edge cases") {
    CHECK(build_kos(TripleSet{}).concepts().empty());
    CHECK_THROWS_AS(build_kos(to_set({ref(kos("A"), vocab::type, vocab::Concept), lit(kos("A"), vocab::prefLabel, "A"),
                                      ref(kos("A"), vocab::broader, kos("Ghost"))})),
                    IntegrityError);
    CHECK_THROWS_AS(build_kos(to_set({ref(kos("A"), vocab::type, vocab::Concept), lit(kos("A"), vocab::prefLabel, "A"),
                                      ref(kos("A"), vocab::related, kos("Ghost"))})),
                    IntegrityError);
    CHECK_THROWS_AS(build_kos(to_set({ref(kos("A"), vocab::type, vocab::Concept)})), IntegrityError);
    CHECK_THROWS_AS(build_kos(to_set({ref(kos("A"), vocab::type, vocab::Concept), lit(kos("A"), vocab::prefLabel, "A"),
                                      lit(kos("A"), vocab::prefLabel, "B")})),
                    IntegrityError);
}

TEST_CASE("broader and narrower closures on the chain") {
    const KosIndex k = chain();
    CHECK(broader_closure(k, kos("OCW")) == ids({"OCW", "ELearning", "Education"}));
    CHECK(broader_closure(k, kos("Education")) == ids({"Education"}));
    CHECK(narrower_closure(k, kos("Education")) == ids({"Education", "ELearning", "OCW"}));
    CHECK(narrower_closure(k, kos("OCW")) == ids({"OCW"}));
    CHECK_THROWS_AS(broader_closure(k, kos("Nope")), UnknownConcept);
    CHECK_THROWS_AS(narrower_closure(k, kos("Nope")), UnknownConcept);
}

TEST_CASE("closures terminate on a 2-cycle") {
    const KosIndex k = build_kos(scheme({"A", "B"}, {{"A", "B"}, {"B", "A"}}));
    CHECK(broader_closure(k, kos("A")) == ids({"A", "B"}));
    CHECK(narrower_closure(k, kos("A")) == ids({"A", "B"}));
}

TEST_CASE("top concepts") {
    const KosIndex k = chain();
    CHECK(top_concepts_of(k, kos("OCW")) == ids({"Education"}));

    const KosIndex flagged =
        build_kos(scheme({"A", "B", "Root"}, {{"A", "B"}, {"B", "Root"}}, {}, {"B"}));
    CHECK(top_concepts_of(flagged, kos("B")).contains(kos("B")));
    CHECK(top_concepts_of(flagged, kos("A")) == ids({"B", "Root"}));

    const KosIndex cycle = build_kos(scheme({"A", "B"}, {{"A", "B"}, {"B", "A"}}));
    Warnings w;
    CHECK(top_concepts_of(cycle, kos("A"), &w).empty());
    CHECK(w.at("concept_without_top") == 1);
    CHECK(cycle.warnings().at("concept_without_top") == 2);
    CHECK_THROWS_AS(top_concepts_of(cycle, kos("Z")), UnknownConcept);
}

TEST_CASE("related is symmetric and excludes self") {
    const KosIndex k = chain();
    CHECK(related_of(k, kos("OCW")) == ids({"OER"}));
    CHECK(related_of(k, kos("OER")) == ids({"OCW"}));
    CHECK(related_of(k, kos("Education")).empty());
    CHECK_THROWS_AS(related_of(k, kos("Z")), UnknownConcept);

    const KosIndex self = build_kos(scheme({"A"}, {}, {{"A", "A"}}));
    CHECK(related_of(self, kos("A")).empty());
}

TEST_CASE("desk fixture related adjacency matches the hand-listed table") {
    const KosIndex k = load_desk().kos;
    const std::map<std::string, IriSet> expected{
        {"Education", {}},
        {"ELearning", {}},
        {"OCW", ids({"OER"})},
        {"OER", ids({"OCW", "MOOC"})},
        {"MOOC", ids({"OER"})},
        {"ComputerScience", {}},
        {"SemanticWeb", {}},
        {"LinkedData", ids({"KnowledgeOrganization"})},
        {"KnowledgeOrganization", ids({"LinkedData"})},
        {"SocialNetworkAnalysis", {}},
    };
    CHECK(k.concepts().size() == expected.size());
    for (const auto& [id, rel] : expected) CHECK(related_of(k, kos(id)) == rel);
}

TEST_CASE("property: closures match the fixpoint oracle on random graphs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const RandomConceptGraph g = random_concept_graph(rng);
        const KosIndex k = build_kos(scheme(g.ids, g.broader));
        for (const std::string& id : g.ids) {
            const IriSet up = broader_closure(k, kos(id));
            REQUIRE(up == fixpoint_closure(g, kos(id), /*upward=*/true));
            REQUIRE(narrower_closure(k, kos(id)) == fixpoint_closure(g, kos(id), /*upward=*/false));
            // reflexive and idempotent
            CHECK(up.contains(kos(id)));
            for (const Iri& a : up) {
                const IriSet inner = broader_closure(k, a);
                CHECK(std::includes(up.begin(), up.end(), inner.begin(), inner.end()));
            }
        }
    }
}

TEST_CASE("property: related symmetry survives one-sided declarations") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const RandomConceptGraph g = random_concept_graph(rng, 20);
        std::vector<std::pair<std::string, std::string>> rel;
        std::uniform_int_distribution<std::size_t> pick(0, g.ids.size() - 1);
        for (int e = 0; e < 15; ++e) rel.emplace_back(g.ids[pick(rng)], g.ids[pick(rng)]);
        const KosIndex k = build_kos(scheme(g.ids, g.broader, rel));
        for (const auto& [iri, c] : k.concepts()) {
            CHECK_FALSE(c.related.contains(iri));
            for (const Iri& r : c.related) CHECK(k.at(r).related.contains(iri));
        }
    }
}

TEST_CASE("property: build_kos ignores triple order") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        const RandomConceptGraph g = random_concept_graph(rng, 30);
        const TripleSet ts = scheme(g.ids, g.broader);
        CHECK(build_kos(permuted(ts, rng)) == build_kos(ts));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kosnet/error.hpp"
#include "kosnet/recommender.hpp"
#include "support/oracles.hpp"
#include "support/support.hpp"

using namespace kosnet;
using namespace kosnet::testing;

namespace {

std::map<Iri, std::map<Iri, double>> raw(const std::map<Iri, ConceptProfile>& profiles) {
    std::map<Iri, std::map<Iri, double>> out;
    for (const auto& [a, p] : profiles) out[a] = p.weights;
    return out;
}

ConceptWeights random_weights(std::mt19937_64& rng) {
    ConceptWeights w;
    const int n = std::uniform_int_distribution<int>(0, 8)(rng);
    std::uniform_int_distribution<int> key(0, 12);
    std::uniform_int_distribution<int> quarter(1, 12);
    for (int i = 0; i < n; ++i) w["c" + std::to_string(key(rng))] = 0.25 * quarter(rng);
    return w;
}

void check_against_oracle(const Catalog& cat, const std::map<Iri, ConceptProfile>& profiles, int top_k,
                          double min_score) {
    const auto got = recommend_pairs(cat, coauthorship_graph(cat), profiles, {top_k, min_score});
    const auto want = recommend_oracle(cat, raw(profiles), top_k, min_score);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].author_a == want[i].a);
        CHECK(got[i].author_b == want[i].b);
        CHECK(got[i].score == doctest::Approx(want[i].score).epsilon(1e-12));
    }
}

}  // namespace

TEST_CASE("profile_similarity hand cases") {
    const ConceptWeights p{{"x", 1.0}, {"y", 1.0}};
    const ConceptWeights q{{"y", 1.0}, {"z", 1.0}};
    CHECK(profile_similarity(p, q) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(profile_similarity(p, q) - 1.0 / 3.0) < 1e-9);
    CHECK(profile_similarity(p, p) == 1.0);
    CHECK(profile_similarity(p, ConceptWeights{{"w", 3.0}}) == 0.0);
    CHECK(profile_similarity(ConceptWeights{}, ConceptWeights{}) == 0.0);
    CHECK(profile_similarity(ConceptWeights{{"x", 2.0}}, ConceptWeights{{"x", 1.0}}) == 0.5);
}

TEST_CASE("shared concepts are sorted by weight then IRI") {
    const ConceptWeights p{{"a", 1.0}, {"b", 0.5}, {"c", 2.0}, {"d", 1.0}};
    const ConceptWeights q{{"a", 3.0}, {"b", 0.5}, {"c", 0.5}, {"d", 1.0}, {"e", 1.0}};
    const std::vector<SharedConcept> expected{{"a", 1.0}, {"d", 1.0}, {"b", 0.5}, {"c", 0.5}};
    CHECK(shared_concepts(p, q) == expected);
}

TEST_CASE("property: similarity is symmetric, bounded and scale invariant") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 2000; ++i) {
        const ConceptWeights p = random_weights(rng), q = random_weights(rng);
        const double s = profile_similarity(p, q);
        CHECK(s == profile_similarity(q, p));
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        CHECK(s == doctest::Approx(jaccard_oracle(p, q)).epsilon(1e-12));
        ConceptWeights p3 = p, q3 = q;
        for (auto& [_, w] : p3) w *= 3.7;
        for (auto& [_, w] : q3) w *= 3.7;
        CHECK(profile_similarity(p3, q3) == doctest::Approx(s).epsilon(1e-12));
        if (s > 0.0) CHECK_FALSE(shared_concepts(p, q).empty());
    }
}

TEST_CASE("recommend_pairs basics on the desk fixture") {
    const Dataset ds = load_desk();
    const auto profiles = all_profiles(ds.catalog, ds.kos, EnrichConfig{});
    const WeightedGraph g = coauthorship_graph(ds.catalog);

    const auto recs = recommend_pairs(ds.catalog, g, profiles, {1000, 0.0});
    for (const Recommendation& r : recs) {
        CHECK(r.author_a < r.author_b);
        CHECK(g.weight(r.author_a, r.author_b) == 0);
        if (r.score > 0) CHECK_FALSE(r.shared_concepts.empty());
    }
    CHECK(recommend_pairs(ds.catalog, g, profiles, {0, 0.05}).empty());
    CHECK_THROWS_AS(recommend_pairs(ds.catalog, g, profiles, {-1, 0.05}), ConfigError);
    CHECK_THROWS_AS(recommend_pairs(ds.catalog, g, profiles, {5, 1.5}), ConfigError);

    const auto top = recommend_pairs(ds.catalog, g, profiles, {20, 0.05});
    const bool has_synonym_pair = std::any_of(top.begin(), top.end(), [](const Recommendation& r) {
        return r.author_a == author("a01") && r.author_b == author("a09");
    });
    CHECK(has_synonym_pair);
}

TEST_CASE("recommend_pairs equals the brute-force oracle") {
    const Dataset ds = load_desk();
    for (const bool enabled : {true, false}) {
        EnrichConfig cfg;
        cfg.enrichment_enabled = enabled;
        const auto profiles = all_profiles(ds.catalog, ds.kos, cfg);
        for (const int k : {0, 1, 5, 20, 100})
            for (const double m : {0.0, 0.05, 0.2, 1.0}) check_against_oracle(ds.catalog, profiles, k, m);
    }

    std::mt19937_64 rng(62);
    const std::vector<std::string> words{"OCW", "OER", "open learning materials", "e-Learning", "MOOC",
                                         "Linked Data", "KOS", "blockchain", "Social Network Analysis"};
    for (int i = 0; i < 60; ++i) {
        const Catalog cat = build_catalog(random_catalog(rng, 2 + i % 49, 1 + i % 30, words));
        const auto profiles = all_profiles(cat, ds.kos, EnrichConfig{});
        check_against_oracle(cat, profiles, 20, 0.05);
        check_against_oracle(cat, profiles, 1000, 0.0);
    }
}

TEST_CASE("ranking is invariant under uniform profile scaling") {
    const Dataset ds = load_desk();
    auto profiles = all_profiles(ds.catalog, ds.kos, EnrichConfig{});
    const WeightedGraph g = coauthorship_graph(ds.catalog);
    const auto base = recommend_pairs(ds.catalog, g, profiles, {100, 0.0});
    for (auto& [_, p] : profiles)
        for (auto& [c, w] : p.weights) w *= 4.0;
    const auto scaled = recommend_pairs(ds.catalog, g, profiles, {100, 0.0});
    REQUIRE(base.size() == scaled.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(base[i].author_a == scaled[i].author_a);
        CHECK(base[i].author_b == scaled[i].author_b);
        CHECK(base[i].score == scaled[i].score);
    }
}

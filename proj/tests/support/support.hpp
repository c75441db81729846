#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kosnet/ingest.hpp"
#include "kosnet/kos.hpp"
#include "kosnet/pipeline.hpp"

namespace kosnet::testing {

inline std::filesystem::path data_dir() { return KOSNET_TEST_DATA_DIR; }
inline std::filesystem::path desk_data() { return data_dir() / "desk" / "data.nt"; }
inline std::filesystem::path desk_kos() { return data_dir() / "desk" / "kos.nt"; }
inline std::filesystem::path desk_kos_severed() { return data_dir() / "desk" / "kos_severed.nt"; }

inline Dataset load_desk() { return load_dataset(desk_data(), desk_kos()); }

inline const std::string D = "http://kosnet.dev/d/";
inline const std::string K = "http://kosnet.dev/kos/";
inline std::string author(const std::string& id) { return D + "author/" + id; }
inline std::string paper(const std::string& id) { return D + "paper/" + id; }
inline std::string org(const std::string& id) { return D + "org/" + id; }
inline std::string kos(const std::string& id) { return K + id; }

inline Triple lit(const std::string& s, const std::string& p, const std::string& o) {
    return Triple{s, p, Literal{o}};
}
inline Triple ref(const std::string& s, const std::string& p, const std::string& o) {
    return Triple{s, p, IriRef{o}};
}

inline TripleSet to_set(const std::vector<Triple>& triples) {
    TripleSet ts;
    std::size_t line = 0;
    for (const Triple& t : triples) ts.push_back(t, ++line);
    return ts;
}

/// Small concept scheme; `broader` lists (narrower, broader) id pairs.
inline TripleSet scheme(const std::vector<std::string>& ids,
                        const std::vector<std::pair<std::string, std::string>>& broader,
                        const std::vector<std::pair<std::string, std::string>>& related = {},
                        const std::vector<std::string>& tops = {}) {
    std::vector<Triple> ts;
    for (const std::string& id : ids) {
        ts.push_back(ref(kos(id), vocab::type, vocab::Concept));
        ts.push_back(lit(kos(id), vocab::prefLabel, id));
    }
    for (const auto& [n, b] : broader) ts.push_back(ref(kos(n), vocab::broader, kos(b)));
    for (const auto& [a, b] : related) ts.push_back(ref(kos(a), vocab::related, kos(b)));
    for (const std::string& id : tops) ts.push_back(ref(kos(id), vocab::topConceptOf, kos("scheme")));
    return to_set(ts);
}

struct RandomConceptGraph {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> broader;
};

/// Up to `max_nodes` concepts with random broader edges (cycles and self-edges allowed).
inline RandomConceptGraph random_concept_graph(std::mt19937_64& rng, int max_nodes = 50) {
    RandomConceptGraph g;
    const int n = std::uniform_int_distribution<int>(1, max_nodes)(rng);
    for (int i = 0; i < n; ++i) g.ids.push_back("c" + std::to_string(i));
    const int edges = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int e = 0; e < edges; ++e) g.broader.emplace_back(g.ids[pick(rng)], g.ids[pick(rng)]);
    return g;
}

/// Random valid catalog: `n_authors` authors, a few orgs, papers with random
/// author subsets and keywords drawn from `vocabulary`.
inline TripleSet random_catalog(std::mt19937_64& rng, int n_authors, int n_papers,
                                const std::vector<std::string>& vocabulary) {
    std::vector<Triple> ts;
    const int n_orgs = 3;
    for (int o = 0; o < n_orgs; ++o) {
        const std::string iri = org("r" + std::to_string(o));
        ts.push_back(ref(iri, vocab::type, vocab::Org));
        ts.push_back(lit(iri, vocab::country, o == 0 ? "EC" : "ES"));
    }
    std::uniform_int_distribution<int> pick_org(-1, n_orgs - 1);
    for (int a = 0; a < n_authors; ++a) {
        const std::string iri = author("r" + std::to_string(a));
        ts.push_back(ref(iri, vocab::type, vocab::Author));
        const int o = pick_org(rng);
        if (o >= 0) ts.push_back(ref(iri, vocab::affiliatedWith, org("r" + std::to_string(o))));
    }
    std::uniform_int_distribution<int> pick_author(0, n_authors - 1);
    std::uniform_int_distribution<int> team_size(1, 4);
    std::uniform_int_distribution<int> kw_count(0, 3);
    std::uniform_int_distribution<std::size_t> pick_kw(0, vocabulary.size() - 1);
    for (int p = 0; p < n_papers; ++p) {
        const std::string iri = paper("r" + std::to_string(p));
        ts.push_back(ref(iri, vocab::type, vocab::Paper));
        const int team = team_size(rng);
        for (int i = 0; i < team; ++i)
            ts.push_back(ref(iri, vocab::hasAuthor, author("r" + std::to_string(pick_author(rng)))));
        const int kws = kw_count(rng);
        for (int i = 0; i < kws; ++i) ts.push_back(lit(iri, vocab::keyword, vocabulary[pick_kw(rng)]));
    }
    return to_set(ts);
}

inline TripleSet permuted(const TripleSet& ts, std::mt19937_64& rng) {
    std::vector<Triple> triples = ts.triples;
    std::shuffle(triples.begin(), triples.end(), rng);
    return to_set(triples);
}

}  // namespace kosnet::testing

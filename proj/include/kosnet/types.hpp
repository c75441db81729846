#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace kosnet {

using Iri = std::string;
using IriSet = std::set<Iri>;

/// Named counters for tolerated anomalies ("unknown_predicate" -> 3, ...).
using Warnings = std::map<std::string, std::size_t>;

inline void add_warning(Warnings* warnings, std::string_view key, std::size_t n = 1) {
    if (warnings != nullptr && n > 0) (*warnings)[std::string(key)] += n;
}

inline void merge_warnings(Warnings& into, const Warnings& from) {
    for (const auto& [key, n] : from) into[key] += n;
}

/// Vocabulary namespace shared by the data and KOS snapshots.
inline constexpr std::string_view kVocab = "http://kosnet.dev/s#";

namespace vocab {
inline const Iri type = Iri(kVocab) + "type";
inline const Iri Paper = Iri(kVocab) + "Paper";
inline const Iri Author = Iri(kVocab) + "Author";
inline const Iri Org = Iri(kVocab) + "Org";
inline const Iri Concept = Iri(kVocab) + "Concept";

inline const Iri title = Iri(kVocab) + "title";
inline const Iri hasAuthor = Iri(kVocab) + "hasAuthor";
inline const Iri keyword = Iri(kVocab) + "keyword";
inline const Iri year = Iri(kVocab) + "year";

inline const Iri name = Iri(kVocab) + "name";
inline const Iri affiliatedWith = Iri(kVocab) + "affiliatedWith";

inline const Iri orgName = Iri(kVocab) + "orgName";
inline const Iri country = Iri(kVocab) + "country";

inline const Iri prefLabel = Iri(kVocab) + "prefLabel";
inline const Iri altLabel = Iri(kVocab) + "altLabel";
inline const Iri broader = Iri(kVocab) + "broader";
inline const Iri related = Iri(kVocab) + "related";
inline const Iri topConceptOf = Iri(kVocab) + "topConceptOf";
}  // namespace vocab

}  // namespace kosnet

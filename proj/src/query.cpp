#include "kosnet/query.hpp"

#include <algorithm>
#include <map>

#include "kosnet/error.hpp"
#include "kosnet/keyword.hpp"

namespace kosnet {

AreaQueryResult papers_by_area(const Catalog& cat, const KosIndex& k, const Iri& area) {
    AreaQueryResult out{area, narrower_closure(k, area), {}};
    std::map<std::string, bool> hit;  // keyword -> resolves into the area
    for (const auto& [iri, paper] : cat.papers) {
        for (const std::string& kw : paper.keywords) {
            auto [it, inserted] = hit.try_emplace(kw, false);
            if (inserted) {
                const std::string key = normalize_label(kw);
                it->second = !key.empty() && out.expanded.contains(resolve_keyword(k, kw).concept_iri);
            }
            if (it->second) {
                out.papers.insert(iri);
                break;
            }
        }
    }
    return out;
}

std::vector<AuthorKeywords> authors_and_keywords_of(const Catalog& cat, const IriSet& papers) {
    std::map<Iri, AuthorKeywords> rows;
    for (const Iri& p : papers) {
        auto it = cat.papers.find(p);
        if (it == cat.papers.end()) throw UnknownPaper(p);
        for (const Iri& a : it->second.author_iris) {
            AuthorKeywords& row = rows[a];
            row.author = a;
            for (const std::string& kw : it->second.keywords)
                if (std::find(row.keywords.begin(), row.keywords.end(), kw) == row.keywords.end())
                    row.keywords.push_back(kw);
        }
    }
    std::vector<AuthorKeywords> out;
    out.reserve(rows.size());
    for (auto& [_, row] : rows) out.push_back(std::move(row));
    return out;
}

std::vector<KeywordTops> tops_of_keywords(const KosIndex& k, const std::vector<std::string>& keywords) {
    std::vector<KeywordTops> out;
    out.reserve(keywords.size());
    for (const std::string& kw : keywords) {
        const Resolution r = resolve_keyword(k, kw);
        out.push_back({kw, r.resolved ? top_concepts_of(k, r.concept_iri) : IriSet{}});
    }
    return out;
}

}  // namespace kosnet

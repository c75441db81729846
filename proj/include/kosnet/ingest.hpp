#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kosnet/types.hpp"

namespace kosnet {

struct Literal {
    std::string text;
    auto operator<=>(const Literal&) const = default;
};

struct IriRef {
    Iri iri;
    auto operator<=>(const IriRef&) const = default;
};

using Object = std::variant<IriRef, Literal>;

struct Triple {
    Iri subject;
    Iri predicate;
    Object object;

    bool object_is_iri() const { return std::holds_alternative<IriRef>(object); }
    const Iri& object_iri() const { return std::get<IriRef>(object).iri; }
    const std::string& object_literal() const { return std::get<Literal>(object).text; }

    auto operator<=>(const Triple&) const = default;
};

/// Triples in file order, each with the 1-based line it came from.
struct TripleSet {
    std::vector<Triple> triples;
    std::vector<std::size_t> source_line;

    std::size_t size() const { return triples.size(); }
    bool empty() const { return triples.empty(); }
    void push_back(Triple t, std::size_t line) {
        triples.push_back(std::move(t));
        source_line.push_back(line);
    }
};

/// True for `scheme:rest` with an RFC 3986 scheme and no whitespace, `<`, `>` or `"`.
bool is_absolute_iri(std::string_view text);

/// Parses the line-oriented snapshot format. Throws ParseError on the first bad line.
TripleSet parse_triples(std::string_view text);

/// Renders one triple as a snapshot line (without trailing newline).
std::string format_triple(const Triple& t);

struct PaperRecord {
    std::string title;
    std::optional<int> year;
    IriSet author_iris;
    /// Distinct keyword literals, verbatim, in byte order.
    std::vector<std::string> keywords;

    bool operator==(const PaperRecord&) const = default;
};

struct AuthorRecord {
    std::string name;
    std::optional<Iri> org_iri;

    bool operator==(const AuthorRecord&) const = default;
};

struct OrgRecord {
    std::string name;
    /// Upper-case ISO 3166 alpha-2 style code.
    std::optional<std::string> country;

    bool operator==(const OrgRecord&) const = default;
};

struct Catalog {
    std::map<Iri, PaperRecord> papers;
    std::map<Iri, AuthorRecord> authors;
    std::map<Iri, OrgRecord> orgs;
    Warnings warnings;

    /// Compares records only; ingest warnings are diagnostics.
    bool operator==(const Catalog& other) const {
        return papers == other.papers && authors == other.authors && orgs == other.orgs;
    }

    /// Papers the author appears on, in IRI order.
    std::vector<Iri> papers_of(const Iri& author) const;
};

/// Types entities through the vocabulary and validates cross references.
/// Throws IntegrityError for dangling author/org references, authorless papers
/// and conflicting single-valued fields.
Catalog build_catalog(const TripleSet& ts);

/// Canonical, sorted snapshot text for a catalog. Re-parsing yields an equal catalog.
std::string serialize_catalog(const Catalog& cat);

}  // namespace kosnet

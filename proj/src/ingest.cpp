#include "kosnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "kosnet/error.hpp"

namespace kosnet {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

bool is_forbidden_iri_char(unsigned char c) {
    return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '\\' || c == 0x7f;
}

class LineParser {
public:
    LineParser(std::string_view line, std::size_t number) : line_(line), number_(number) {}

    Triple parse() {
        Triple t;
        t.subject = iri("subject");
        require_blank("after subject");
        t.predicate = iri("predicate");
        require_blank("after predicate");
        if (peek() == '<') {
            t.object = IriRef{iri("object")};
        } else if (peek() == '"') {
            t.object = Literal{literal()};
        } else {
            fail("object must be <IRI> or \"literal\"");
        }
        skip_blank();
        if (peek() != '.') fail("missing trailing ' .'");
        ++pos_;
        skip_blank();
        if (pos_ != line_.size()) fail("unexpected text after ' .'");
        return t;
    }

private:
    char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }

    [[noreturn]] void fail(std::string reason) const { throw ParseError(number_, std::move(reason)); }

    void skip_blank() {
        while (pos_ < line_.size() && is_blank(line_[pos_])) ++pos_;
    }

    void require_blank(const char* where) {
        if (!is_blank(peek())) fail(std::string("expected whitespace ") + where);
        skip_blank();
    }

    Iri iri(const char* role) {
        if (peek() != '<') fail(std::string(role) + " must start with '<'");
        const std::size_t close = line_.find('>', pos_ + 1);
        if (close == std::string_view::npos) fail(std::string(role) + " is missing '>'");
        std::string_view body = line_.substr(pos_ + 1, close - pos_ - 1);
        if (!is_absolute_iri(body)) fail(std::string(role) + " is not an absolute IRI: <" + std::string(body) + ">");
        pos_ = close + 1;
        return Iri(body);
    }

    std::string literal() {
        std::string out;
        ++pos_;  // opening quote
        while (pos_ < line_.size()) {
            const char c = line_[pos_++];
            if (c == '"') return out;
            if (c == '\\') {
                if (pos_ >= line_.size()) break;
                const char e = line_[pos_++];
                if (e != '"' && e != '\\') fail(std::string("unsupported escape '\\") + e + "'");
                out.push_back(e);
            } else {
                out.push_back(c);
            }
        }
        fail("unterminated literal");
    }

    std::string_view line_;
    std::size_t number_;
    std::size_t pos_ = 0;
};

std::string escape_literal(std::string_view text) {
    std::string out;
    out.reserve(text.size() + 2);
    out.push_back('"');
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

enum class Kind { Paper, Author, Org };

/// Collects values of a single-valued field and rejects conflicts.
template <typename T>
class SingleValued {
public:
    explicit SingleValued(const Iri& predicate) : predicate_(predicate) {}

    void set(const Iri& subject, T value) {
        auto [it, inserted] = values_.try_emplace(subject, value);
        if (!inserted && it->second != value)
            throw IntegrityError(subject, "conflicting values for <" + predicate_ + ">");
    }

    const T* find(const Iri& subject) const {
        auto it = values_.find(subject);
        return it == values_.end() ? nullptr : &it->second;
    }

private:
    const Iri& predicate_;
    std::map<Iri, T> values_;
};

const std::string& expect_literal(const Triple& t) {
    if (t.object_is_iri()) throw IntegrityError(t.subject, "<" + t.predicate + "> expects a literal object");
    return t.object_literal();
}

const Iri& expect_iri(const Triple& t) {
    if (!t.object_is_iri()) throw IntegrityError(t.subject, "<" + t.predicate + "> expects an IRI object");
    return t.object_iri();
}

int parse_year(const Triple& t) {
    const std::string& text = expect_literal(t);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw IntegrityError(t.subject, "year is not an integer: \"" + text + "\"");
    return value;
}

std::string parse_country(const Triple& t) {
    std::string code = expect_literal(t);
    if (code.size() != 2 || !std::isalpha(static_cast<unsigned char>(code[0])) ||
        !std::isalpha(static_cast<unsigned char>(code[1])))
        throw IntegrityError(t.subject, "country is not a 2-letter code: \"" + code + "\"");
    for (char& c : code) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return code;
}

}  // namespace

bool is_absolute_iri(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == 0 || colon == std::string_view::npos || colon + 1 == text.size()) return false;
    if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
    for (std::size_t i = 1; i < colon; ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
    }
    return std::none_of(text.begin(), text.end(),
                        [](char c) { return is_forbidden_iri_char(static_cast<unsigned char>(c)); });
}

TripleSet parse_triples(std::string_view text) {
    TripleSet out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        while (!line.empty() && is_blank(line.front())) line.remove_prefix(1);
        while (!line.empty() && is_blank(line.back())) line.remove_suffix(1);
        if (!line.empty() && line.front() != '#') out.push_back(LineParser(line, number).parse(), number);
        start = end + 1;
    }
    return out;
}

std::string format_triple(const Triple& t) {
    std::string out = "<" + t.subject + "> <" + t.predicate + "> ";
    if (t.object_is_iri())
        out += "<" + t.object_iri() + ">";
    else
        out += escape_literal(t.object_literal());
    out += " .";
    return out;
}

std::vector<Iri> Catalog::papers_of(const Iri& author) const {
    std::vector<Iri> out;
    for (const auto& [iri, paper] : papers)
        if (paper.author_iris.contains(author)) out.push_back(iri);
    return out;
}

Catalog build_catalog(const TripleSet& ts) {
    Catalog cat;
    const std::set<Triple> unique(ts.triples.begin(), ts.triples.end());
    add_warning(&cat.warnings, "duplicate_triple", ts.size() - unique.size());

    std::map<Iri, Kind> kinds;
    for (const Triple& t : unique) {
        if (t.predicate != vocab::type) continue;
        const Iri& type = expect_iri(t);
        std::optional<Kind> kind;
        if (type == vocab::Paper) kind = Kind::Paper;
        else if (type == vocab::Author) kind = Kind::Author;
        else if (type == vocab::Org) kind = Kind::Org;
        if (!kind) {
            add_warning(&cat.warnings, "unknown_type");
            continue;
        }
        auto [it, inserted] = kinds.try_emplace(t.subject, *kind);
        if (!inserted && it->second != *kind) throw IntegrityError(t.subject, "conflicting type declarations");
    }
    for (const auto& [iri, kind] : kinds) {
        switch (kind) {
            case Kind::Paper: cat.papers[iri]; break;
            case Kind::Author: cat.authors[iri]; break;
            case Kind::Org: cat.orgs[iri]; break;
        }
    }

    auto kind_of = [&](const Iri& iri) -> std::optional<Kind> {
        auto it = kinds.find(iri);
        return it == kinds.end() ? std::nullopt : std::optional<Kind>(it->second);
    };

    SingleValued<std::string> titles(vocab::title), names(vocab::name), org_names(vocab::orgName),
        countries(vocab::country);
    SingleValued<int> years(vocab::year);
    SingleValued<Iri> affiliations(vocab::affiliatedWith);

    struct Domain {
        const Iri* predicate;
        Kind kind;
    };
    const Domain domains[] = {
        {&vocab::title, Kind::Paper},       {&vocab::hasAuthor, Kind::Paper}, {&vocab::keyword, Kind::Paper},
        {&vocab::year, Kind::Paper},        {&vocab::name, Kind::Author},     {&vocab::affiliatedWith, Kind::Author},
        {&vocab::orgName, Kind::Org},       {&vocab::country, Kind::Org},
    };

    for (const Triple& t : unique) {
        if (t.predicate == vocab::type) continue;
        const Domain* domain = nullptr;
        for (const Domain& d : domains)
            if (*d.predicate == t.predicate) domain = &d;
        if (domain == nullptr) {
            add_warning(&cat.warnings, "unknown_predicate");
            continue;
        }
        if (kind_of(t.subject) != domain->kind) {
            add_warning(&cat.warnings, "untyped_subject");
            continue;
        }

        if (t.predicate == vocab::title) {
            titles.set(t.subject, expect_literal(t));
        } else if (t.predicate == vocab::hasAuthor) {
            const Iri& author = expect_iri(t);
            if (kind_of(author) != Kind::Author)
                throw IntegrityError(author, "referenced author has no Author type declaration");
            cat.papers[t.subject].author_iris.insert(author);
        } else if (t.predicate == vocab::keyword) {
            // `unique` is sorted, so keywords arrive in byte order and distinct.
            cat.papers[t.subject].keywords.push_back(expect_literal(t));
        } else if (t.predicate == vocab::year) {
            years.set(t.subject, parse_year(t));
        } else if (t.predicate == vocab::name) {
            names.set(t.subject, expect_literal(t));
        } else if (t.predicate == vocab::affiliatedWith) {
            const Iri& org = expect_iri(t);
            if (kind_of(org) != Kind::Org) throw IntegrityError(org, "referenced org has no Org type declaration");
            affiliations.set(t.subject, org);
        } else if (t.predicate == vocab::orgName) {
            org_names.set(t.subject, expect_literal(t));
        } else if (t.predicate == vocab::country) {
            countries.set(t.subject, parse_country(t));
        }
    }

    for (auto& [iri, paper] : cat.papers) {
        if (paper.author_iris.empty()) throw IntegrityError(iri, "paper has no authors");
        if (const auto* v = titles.find(iri)) paper.title = *v;
        if (const auto* v = years.find(iri)) paper.year = *v;
    }
    for (auto& [iri, author] : cat.authors) {
        if (const auto* v = names.find(iri)) author.name = *v;
        if (const auto* v = affiliations.find(iri)) author.org_iri = *v;
    }
    for (auto& [iri, org] : cat.orgs) {
        if (const auto* v = org_names.find(iri)) org.name = *v;
        if (const auto* v = countries.find(iri)) org.country = *v;
    }
    return cat;
}

std::string serialize_catalog(const Catalog& cat) {
    std::set<Triple> triples;
    auto lit = [&](const Iri& s, const Iri& p, const std::string& v) {
        if (!v.empty()) triples.insert(Triple{s, p, Literal{v}});
    };
    auto ref = [&](const Iri& s, const Iri& p, const Iri& o) { triples.insert(Triple{s, p, IriRef{o}}); };

    for (const auto& [iri, org] : cat.orgs) {
        ref(iri, vocab::type, vocab::Org);
        lit(iri, vocab::orgName, org.name);
        if (org.country) lit(iri, vocab::country, *org.country);
    }
    for (const auto& [iri, author] : cat.authors) {
        ref(iri, vocab::type, vocab::Author);
        lit(iri, vocab::name, author.name);
        if (author.org_iri) ref(iri, vocab::affiliatedWith, *author.org_iri);
    }
    for (const auto& [iri, paper] : cat.papers) {
        ref(iri, vocab::type, vocab::Paper);
        lit(iri, vocab::title, paper.title);
        if (paper.year) lit(iri, vocab::year, std::to_string(*paper.year));
        for (const Iri& a : paper.author_iris) ref(iri, vocab::hasAuthor, a);
        for (const std::string& k : paper.keywords) triples.insert(Triple{iri, vocab::keyword, Literal{k}});
    }

    std::string out;
    for (const Triple& t : triples) {
        out += format_triple(t);
        out += '\n';
    }
    return out;
}

}  // namespace kosnet

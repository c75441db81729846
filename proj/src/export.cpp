#include "kosnet/export.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace kosnet {

using nlohmann::json;

namespace {

std::string dot_id(const std::string& id) {
    std::string out = "\"";
    for (char c : id) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string fixed6(double v) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite number in output");
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

std::string dump_scalar(const json& v) { return v.dump(-1, ' ', false, json::error_handler_t::replace); }

void write(const json& v, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + dump_scalar(json(key)) + ": ";
                write(item, depth + 1, out);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0) out += ",\n";
                out += pad;
                write(v[i], depth + 1, out);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += fixed6(v.get<double>());
            return;
        default:
            out += dump_scalar(v);
    }
}

json members_json(const std::set<NodeId>& members) { return json(std::vector<NodeId>(members.begin(), members.end())); }

}  // namespace

std::string export_graph(const WeightedGraph& g, GraphFormat format) {
    if (format == GraphFormat::Json) return dump_canonical(to_json(g));
    std::string out = "graph G {\n";
    for (const NodeId& n : g.nodes()) out += "  " + dot_id(n) + ";\n";
    for (const auto& [e, w] : g.edges())
        out += "  " + dot_id(e.first) + " -- " + dot_id(e.second) + " [weight=" + std::to_string(w) + "];\n";
    out += "}\n";
    return out;
}

std::string dump_canonical(const json& value) {
    std::string out;
    write(value, 0, out);
    out += '\n';
    return out;
}

json to_json(const WeightedGraph& g) {
    json edges = json::array();
    for (const auto& [e, w] : g.edges()) edges.push_back({{"a", e.first}, {"b", e.second}, {"w", w}});
    return {{"nodes", members_json(g.nodes())}, {"edges", std::move(edges)}};
}

json to_json(const Partition& p) {
    json communities = json::array();
    for (const auto& [label, members] : p.communities())
        communities.push_back({{"label", label}, {"members", members_json(members)}});
    return {{"converged", p.converged}, {"communities", std::move(communities)}};
}

json to_json(const TopicCommunity& t) {
    return {{"members", members_json(t.members)}, {"partition", to_json(t.partition)}};
}

json to_json(const std::vector<Recommendation>& recs) {
    json out = json::array();
    for (const Recommendation& r : recs) {
        json shared = json::array();
        for (const SharedConcept& s : r.shared_concepts) shared.push_back({{"concept", s.concept_iri}, {"weight", s.weight}});
        out.push_back({{"a", r.author_a}, {"b", r.author_b}, {"score", r.score}, {"shared_concepts", std::move(shared)}});
    }
    return out;
}

json to_json(const AreaQueryResult& r) {
    return {{"concept", r.concept_iri}, {"expanded", members_json(r.expanded)}, {"papers", members_json(r.papers)}};
}

json to_json(const std::vector<AuthorKeywords>& rows) {
    json out = json::array();
    for (const AuthorKeywords& row : rows) out.push_back({{"author", row.author}, {"keywords", row.keywords}});
    return out;
}

json to_json(const std::vector<KeywordTops>& rows) {
    json out = json::array();
    for (const KeywordTops& row : rows) out.push_back({{"keyword", row.keyword}, {"tops", members_json(row.tops)}});
    return out;
}

}  // namespace kosnet

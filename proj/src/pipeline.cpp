#include "kosnet/pipeline.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "kosnet/communities.hpp"
#include "kosnet/error.hpp"
#include "kosnet/export.hpp"
#include "kosnet/graph.hpp"
#include "kosnet/keyword.hpp"

namespace kosnet {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
    while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("invalid number for " + key + ": \"" + text + "\"");
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigError("invalid boolean for " + key + ": \"" + text + "\"");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << content;
    if (!out) throw ConfigError("failed writing " + path.string());
}

void prefixed(json& into, const std::string& prefix, const Warnings& w) {
    for (const auto& [key, n] : w) into[prefix + "." + key] = n;
}

}  // namespace

void PipelineConfig::validate() const {
    for (const auto& [what, path] : {std::pair{"data", &data_path}, std::pair{"kos", &kos_path}}) {
        if (path->empty()) throw ConfigError(std::string("no ") + what + " file given");
        std::ifstream probe(*path);
        if (!probe) throw ConfigError(std::string("cannot read ") + what + " file " + path->string());
    }
    enrich.validate();
    recommend.validate();
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
    std::map<std::string, std::string> values;
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++number;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) throw ConfigError("config line " + std::to_string(number) + ": empty key");
        values[key] = std::string(trim(line.substr(eq + 1)));
    }
    return values;
}

void apply_config(const std::map<std::string, std::string>& values, PipelineConfig& cfg) {
    for (const auto& [key, value] : values) {
        if (key == "data_path") cfg.data_path = value;
        else if (key == "kos_path") cfg.kos_path = value;
        else if (key == "output_dir") cfg.output_dir = value;
        else if (key == "w_direct") cfg.enrich.w_direct = parse_number<double>(key, value);
        else if (key == "w_related") cfg.enrich.w_related = parse_number<double>(key, value);
        else if (key == "w_broader") cfg.enrich.w_broader = parse_number<double>(key, value);
        else if (key == "enrichment_enabled") cfg.enrich.enrichment_enabled = parse_bool(key, value);
        else if (key == "top_k") cfg.recommend.top_k = parse_number<int>(key, value);
        else if (key == "min_score") cfg.recommend.min_score = parse_number<double>(key, value);
        else throw ConfigError("unknown config key: " + key);
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Dataset load_dataset(const std::filesystem::path& data_path, const std::filesystem::path& kos_path) {
    auto parse = [](const std::filesystem::path& path) {
        const std::string text = read_file(path);
        try {
            return parse_triples(text);
        } catch (const ParseError& e) {
            throw ParseError(path.string(), e.line(), e.reason());
        }
    };
    const TripleSet data = parse(data_path);
    const TripleSet kos = parse(kos_path);
    return Dataset{build_catalog(data), build_kos(kos)};
}

json dataset_summary(const Dataset& ds) {
    const Catalog& cat = ds.catalog;
    std::set<std::string> countries, keywords;
    for (const auto& [_, org] : cat.orgs)
        if (org.country) countries.insert(*org.country);
    for (const auto& [_, paper] : cat.papers) keywords.insert(paper.keywords.begin(), paper.keywords.end());

    std::size_t resolved = 0, unresolved = 0, ambiguous = 0, empty = 0;
    for (const std::string& kw : keywords) {
        try {
            const Resolution r = resolve_keyword(ds.kos, kw);
            ++(r.resolved ? resolved : unresolved);
            if (r.ambiguous) ++ambiguous;
        } catch (const EmptyKey&) {
            ++empty;
        }
    }

    json warnings = json::object();
    prefixed(warnings, "catalog", cat.warnings);
    prefixed(warnings, "kos", ds.kos.warnings());

    return {
        {"catalog",
         {{"papers", cat.papers.size()},
          {"authors", cat.authors.size()},
          {"orgs", cat.orgs.size()},
          {"countries", countries.size()}}},
        {"kos", {{"concepts", ds.kos.concepts().size()}, {"label_keys", ds.kos.label_index().size()}}},
        {"keywords",
         {{"distinct", keywords.size()},
          {"resolved", resolved},
          {"unresolved", unresolved},
          {"ambiguous", ambiguous},
          {"empty_key", empty}}},
        {"warnings", std::move(warnings)},
    };
}

json build_report(const Dataset& ds, const PipelineConfig& cfg) {
    json report = dataset_summary(ds);
    const Catalog& cat = ds.catalog;

    Warnings graph_warnings;
    const WeightedGraph authors = coauthorship_graph(cat);
    const WeightedGraph orgs = aggregate_graph(cat, AggregationLevel::Institution, &graph_warnings);
    const WeightedGraph countries = aggregate_graph(cat, AggregationLevel::Country, &graph_warnings);
    prefixed(report["warnings"], "graph", graph_warnings);

    auto stats = [](const WeightedGraph& g) { return json{{"nodes", g.nodes().size()}, {"edges", g.edges().size()}}; };
    report["graphs"] = {{"authors", stats(authors)}, {"orgs", stats(orgs)}, {"countries", stats(countries)}};

    const auto profiles = all_profiles(cat, ds.kos, cfg.enrich);

    json topics = json::object();
    for (const auto& [iri, c] : ds.kos.concepts())
        if (c.is_top || c.broader.empty()) topics[iri] = to_json(topic_community(cat, ds.kos, profiles, authors, iri));

    report["communities"] = {
        {"components", to_json(connected_components(authors))},
        {"label_propagation", to_json(label_propagation(authors))},
        {"topics", std::move(topics)},
    };
    report["recommendations"] = to_json(recommend_pairs(cat, authors, profiles, cfg.recommend));
    report["config"] = {
        {"w_direct", cfg.enrich.w_direct},
        {"w_related", cfg.enrich.w_related},
        {"w_broader", cfg.enrich.w_broader},
        {"enrichment_enabled", cfg.enrich.enrichment_enabled},
        {"top_k", cfg.recommend.top_k},
        {"min_score", cfg.recommend.min_score},
    };
    return report;
}

void run_pipeline(const PipelineConfig& cfg) {
    cfg.validate();
    if (cfg.output_dir.empty()) throw ConfigError("no output directory given");
    const Dataset ds = load_dataset(cfg.data_path, cfg.kos_path);
    const json report = build_report(ds, cfg);

    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) throw ConfigError("cannot create " + cfg.output_dir.string() + ": " + ec.message());

    write_file(cfg.output_dir / "report.json", dump_canonical(report));
    write_file(cfg.output_dir / "authors.dot", export_graph(coauthorship_graph(ds.catalog), GraphFormat::Dot));
    write_file(cfg.output_dir / "orgs.dot",
               export_graph(aggregate_graph(ds.catalog, AggregationLevel::Institution), GraphFormat::Dot));
    write_file(cfg.output_dir / "countries.dot",
               export_graph(aggregate_graph(ds.catalog, AggregationLevel::Country), GraphFormat::Dot));
}

}  // namespace kosnet

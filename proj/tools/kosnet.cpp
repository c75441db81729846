// kosnet: collaboration-network discovery over scholarly triple snapshots.
//
// Exit codes: 0 ok, 1 usage/config error, 2 parse error, 3 integrity or lookup error, 4 anything else.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kosnet/communities.hpp"
#include "kosnet/error.hpp"
#include "kosnet/export.hpp"
#include "kosnet/pipeline.hpp"
#include "kosnet/query.hpp"

namespace {

using namespace kosnet;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kIntegrity = 3 };

struct Options {
    std::string data;
    std::string kos;
    std::string config;
    std::string output;

    std::optional<std::string> output_dir;
    std::optional<double> w_direct, w_related, w_broader, min_score;
    std::optional<int> top_k;
    bool no_enrich = false;

    std::string level = "author";
    std::string format = "dot";
    std::string algorithm = "components";
    std::string topic;
    int max_iters = 100;

    std::string area;
    std::vector<std::string> items;
};

/// Config file first, then flags on top; KOSNET_OUTPUT_DIR only fills a missing output_dir.
PipelineConfig resolve_config(const Options& o) {
    PipelineConfig cfg;
    if (!o.config.empty()) apply_config(parse_config_text(read_file(o.config)), cfg);
    if (!o.data.empty()) cfg.data_path = o.data;
    if (!o.kos.empty()) cfg.kos_path = o.kos;
    if (o.output_dir) cfg.output_dir = *o.output_dir;
    if (o.w_direct) cfg.enrich.w_direct = *o.w_direct;
    if (o.w_related) cfg.enrich.w_related = *o.w_related;
    if (o.w_broader) cfg.enrich.w_broader = *o.w_broader;
    if (o.no_enrich) cfg.enrich.enrichment_enabled = false;
    if (o.top_k) cfg.recommend.top_k = *o.top_k;
    if (o.min_score) cfg.recommend.min_score = *o.min_score;
    if (cfg.output_dir.empty())
        if (const char* env = std::getenv("KOSNET_OUTPUT_DIR"); env != nullptr && *env != '\0') cfg.output_dir = env;
    if (cfg.data_path.empty()) throw CLI::RequiredError("--data");
    if (cfg.kos_path.empty()) throw CLI::RequiredError("--kos");
    cfg.validate();
    return cfg;
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) throw ConfigError("cannot write " + o.output);
}

IriSet area_papers(const Dataset& ds, const Options& o) {
    return papers_by_area(ds.catalog, ds.kos, o.area).papers;
}

std::vector<AuthorKeywords> authors_rows(const Dataset& ds, const Options& o) {
    const IriSet papers = o.area.empty() ? IriSet(o.items.begin(), o.items.end()) : area_papers(ds, o);
    return authors_and_keywords_of(ds.catalog, papers);
}

int run(int argc, char** argv) {
    Options o;
    CLI::App app{"Discover potential collaboration networks from scholarly triples and a concept scheme", "kosnet"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--data", o.data, "Scholarly data snapshot (triples)");
    app.add_option("--kos", o.kos, "Concept scheme snapshot (triples)");
    app.add_option("--config", o.config, "Flat key = value config file");

    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--w-direct", o.w_direct, "Weight of the directly matched concept");
        sub->add_option("--w-related", o.w_related, "Weight of related concepts");
        sub->add_option("--w-broader", o.w_broader, "Weight of broader ancestors");
        sub->add_flag("--no-enrich", o.no_enrich, "Use direct concepts only");
    };
    auto add_ranking = [&](CLI::App* sub) {
        sub->add_option("--top", o.top_k, "Maximum number of recommendations");
        sub->add_option("--min-score", o.min_score, "Minimum similarity score");
    };

    auto* validate = app.add_subcommand("validate", "Parse and validate both snapshots, print a summary");

    auto* pipeline = app.add_subcommand("pipeline", "Write report.json and DOT graphs into the output directory");
    pipeline->add_option("--output-dir", o.output_dir, "Output directory (fallback: $KOSNET_OUTPUT_DIR)");
    add_weights(pipeline);
    add_ranking(pipeline);

    auto* graph = app.add_subcommand("graph", "Export a collaboration graph");
    graph->add_option("--level", o.level, "Granularity")->check(CLI::IsMember({"author", "org", "country"}));
    graph->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("-o,--output", o.output, "Write to file instead of stdout");

    auto* communities = app.add_subcommand("communities", "Detect communities in the co-authorship graph");
    communities->add_option("--algorithm", o.algorithm, "Community algorithm")
        ->check(CLI::IsMember({"components", "labelprop"}));
    communities->add_option("--topic", o.topic, "Restrict to authors interested in a concept IRI");
    communities->add_option("--max-iters", o.max_iters, "Label propagation sweep limit")->check(CLI::PositiveNumber);
    communities->add_option("-o,--output", o.output, "Write to file instead of stdout");
    add_weights(communities);

    auto* recommend = app.add_subcommand("recommend", "Rank non-co-author pairs by enriched interest overlap");
    add_weights(recommend);
    add_ranking(recommend);
    recommend->add_option("-o,--output", o.output, "Write to file instead of stdout");

    auto* query = app.add_subcommand("query", "Run a data-gathering query");
    query->require_subcommand(1);
    query->fallthrough();
    auto* q_area = query->add_subcommand("area", "Papers under a concept and its descendants");
    q_area->add_option("concept", o.area, "Concept IRI")->required();
    auto* q_authors = query->add_subcommand("authors", "Authors and keywords of papers");
    q_authors->add_option("papers", o.items, "Paper IRIs");
    q_authors->add_option("--area", o.area, "Use the papers of this area instead");
    auto* q_tops = query->add_subcommand("tops", "Top concepts of keywords");
    q_tops->add_option("keywords", o.items, "Keywords");
    q_tops->add_option("--area", o.area, "Use every keyword of the papers of this area instead");
    for (auto* q : {q_area, q_authors, q_tops}) q->add_option("-o,--output", o.output, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        const PipelineConfig cfg = resolve_config(o);
        if (pipeline->parsed()) {
            run_pipeline(cfg);
            return kOk;
        }
        const Dataset ds = load_dataset(cfg.data_path, cfg.kos_path);
        const Catalog& cat = ds.catalog;

        if (validate->parsed()) {
            emit(o, dump_canonical(dataset_summary(ds)));
        } else if (graph->parsed()) {
            const GraphFormat fmt = o.format == "json" ? GraphFormat::Json : GraphFormat::Dot;
            const WeightedGraph g = o.level == "author" ? coauthorship_graph(cat)
                                    : o.level == "org"  ? aggregate_graph(cat, AggregationLevel::Institution)
                                                        : aggregate_graph(cat, AggregationLevel::Country);
            emit(o, export_graph(g, fmt));
        } else if (communities->parsed()) {
            const WeightedGraph g = coauthorship_graph(cat);
            if (!o.topic.empty()) {
                const auto profiles = all_profiles(cat, ds.kos, cfg.enrich);
                emit(o, dump_canonical(to_json(topic_community(cat, ds.kos, profiles, g, o.topic))));
            } else {
                const Partition p = o.algorithm == "labelprop" ? label_propagation(g, o.max_iters) : connected_components(g);
                emit(o, dump_canonical(to_json(p)));
            }
        } else if (recommend->parsed()) {
            const auto profiles = all_profiles(cat, ds.kos, cfg.enrich);
            emit(o, dump_canonical(to_json(recommend_pairs(cat, coauthorship_graph(cat), profiles, cfg.recommend))));
        } else if (q_area->parsed()) {
            emit(o, dump_canonical(to_json(papers_by_area(cat, ds.kos, o.area))));
        } else if (q_authors->parsed()) {
            emit(o, dump_canonical(to_json(authors_rows(ds, o))));
        } else if (q_tops->parsed()) {
            std::vector<std::string> keywords = o.items;
            if (!o.area.empty()) {
                keywords.clear();
                for (const AuthorKeywords& row : authors_rows(ds, o))
                    for (const std::string& kw : row.keywords)
                        if (std::find(keywords.begin(), keywords.end(), kw) == keywords.end()) keywords.push_back(kw);
            }
            emit(o, dump_canonical(to_json(tops_of_keywords(ds.kos, keywords))));
        }
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const EmptyKey& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIntegrity;
    }
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 4;
    }
}

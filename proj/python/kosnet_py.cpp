// Python bindings. Results come back as plain dicts and lists shaped like the
// CLI's JSON output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "kosnet/communities.hpp"
#include "kosnet/error.hpp"
#include "kosnet/export.hpp"
#include "kosnet/keyword.hpp"
#include "kosnet/pipeline.hpp"
#include "kosnet/query.hpp"

namespace py = pybind11;
using namespace kosnet;

namespace {

py::object to_python(const nlohmann::json& v) {
    switch (v.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(v.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(v.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(v.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(v.get<double>());
        case nlohmann::json::value_t::string: return py::str(v.get_ref<const std::string&>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : v) out.append(to_python(item));
            return std::move(out);
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, item] : v.items()) out[py::str(key)] = to_python(item);
            return std::move(out);
        }
        default: throw std::runtime_error("unsupported JSON value");
    }
}

EnrichConfig enrich_config(double w_direct, double w_related, double w_broader, bool enrich) {
    EnrichConfig cfg{w_direct, w_related, w_broader, enrich};
    cfg.validate();
    return cfg;
}

AggregationLevel level_of(const std::string& level) {
    if (level == "org") return AggregationLevel::Institution;
    if (level == "country") return AggregationLevel::Country;
    throw ConfigError("unknown level: " + level);
}

WeightedGraph graph_at(const Dataset& ds, const std::string& level) {
    return level == "author" ? coauthorship_graph(ds.catalog) : aggregate_graph(ds.catalog, level_of(level));
}

}  // namespace

PYBIND11_MODULE(_kosnet, m) {
    m.doc() = "Collaboration-network discovery over scholarly triples and a concept scheme";

    auto base = py::register_exception<Error>(m, "KosnetError");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<IntegrityError>(m, "IntegrityError", base);
    py::register_exception<LookupError>(m, "LookupError", base);
    py::register_exception<EmptyKey>(m, "EmptyKey", base);
    py::register_exception<ConfigError>(m, "ConfigError", base);

    m.def("normalize_label", &normalize_label, py::arg("label"));

    py::class_<Dataset>(m, "Dataset")
        .def_static("load", &load_dataset, py::arg("data_path"), py::arg("kos_path"))
        .def("summary", [](const Dataset& ds) { return to_python(dataset_summary(ds)); })
        .def_property_readonly("authors",
                               [](const Dataset& ds) {
                                   std::vector<Iri> out;
                                   for (const auto& [iri, _] : ds.catalog.authors) out.push_back(iri);
                                   return out;
                               })
        .def_property_readonly("concepts",
                               [](const Dataset& ds) {
                                   std::vector<Iri> out;
                                   for (const auto& [iri, _] : ds.kos.concepts()) out.push_back(iri);
                                   return out;
                               })
        .def(
            "resolve",
            [](const Dataset& ds, const std::string& keyword) {
                const Resolution r = resolve_keyword(ds.kos, keyword);
                py::dict out;
                out["keyword"] = r.keyword;
                out["key"] = r.key;
                out["concept"] = r.concept_iri;
                out["resolved"] = r.resolved;
                out["ambiguous"] = r.ambiguous;
                return out;
            },
            py::arg("keyword"))
        .def("broader_closure", [](const Dataset& ds, const Iri& c) { return broader_closure(ds.kos, c); },
             py::arg("concept"))
        .def("narrower_closure", [](const Dataset& ds, const Iri& c) { return narrower_closure(ds.kos, c); },
             py::arg("concept"))
        .def("top_concepts", [](const Dataset& ds, const Iri& c) { return top_concepts_of(ds.kos, c); },
             py::arg("concept"))
        .def(
            "profile",
            [](const Dataset& ds, const Iri& author, double w_direct, double w_related, double w_broader, bool enrich) {
                return author_profile(ds.catalog, ds.kos, enrich_config(w_direct, w_related, w_broader, enrich), author)
                    .weights;
            },
            py::arg("author"), py::arg("w_direct") = 1.0, py::arg("w_related") = 0.5, py::arg("w_broader") = 0.25,
            py::arg("enrich") = true)
        .def(
            "graph",
            [](const Dataset& ds, const std::string& level) { return to_python(to_json(graph_at(ds, level))); },
            py::arg("level") = "author")
        .def(
            "export_graph",
            [](const Dataset& ds, const std::string& level, const std::string& format) {
                if (format != "dot" && format != "json") throw ConfigError("unknown format: " + format);
                return export_graph(graph_at(ds, level), format == "json" ? GraphFormat::Json : GraphFormat::Dot);
            },
            py::arg("level") = "author", py::arg("format") = "dot")
        .def(
            "communities",
            [](const Dataset& ds, const std::string& algorithm, int max_iters) {
                const WeightedGraph g = coauthorship_graph(ds.catalog);
                if (algorithm == "components") return to_python(to_json(connected_components(g)));
                if (algorithm == "labelprop") return to_python(to_json(label_propagation(g, max_iters)));
                throw ConfigError("unknown algorithm: " + algorithm);
            },
            py::arg("algorithm") = "components", py::arg("max_iters") = 100)
        .def(
            "topic_community",
            [](const Dataset& ds, const Iri& topic, bool enrich) {
                const auto profiles = all_profiles(ds.catalog, ds.kos, enrich_config(1.0, 0.5, 0.25, enrich));
                return to_python(
                    to_json(topic_community(ds.catalog, ds.kos, profiles, coauthorship_graph(ds.catalog), topic)));
            },
            py::arg("topic"), py::arg("enrich") = true)
        .def(
            "recommend",
            [](const Dataset& ds, int top_k, double min_score, double w_direct, double w_related, double w_broader,
               bool enrich) {
                const auto profiles =
                    all_profiles(ds.catalog, ds.kos, enrich_config(w_direct, w_related, w_broader, enrich));
                return to_python(
                    to_json(recommend_pairs(ds.catalog, coauthorship_graph(ds.catalog), profiles, {top_k, min_score})));
            },
            py::arg("top_k") = 20, py::arg("min_score") = 0.05, py::arg("w_direct") = 1.0, py::arg("w_related") = 0.5,
            py::arg("w_broader") = 0.25, py::arg("enrich") = true)
        .def(
            "papers_by_area",
            [](const Dataset& ds, const Iri& area) { return to_python(to_json(papers_by_area(ds.catalog, ds.kos, area))); },
            py::arg("area"))
        .def(
            "authors_and_keywords",
            [](const Dataset& ds, const std::vector<Iri>& papers) {
                return to_python(to_json(authors_and_keywords_of(ds.catalog, IriSet(papers.begin(), papers.end()))));
            },
            py::arg("papers"))
        .def(
            "tops_of_keywords",
            [](const Dataset& ds, const std::vector<std::string>& keywords) {
                return to_python(to_json(tops_of_keywords(ds.kos, keywords)));
            },
            py::arg("keywords"));

    m.def(
        "run_pipeline",
        [](const std::filesystem::path& data_path, const std::filesystem::path& kos_path,
           const std::filesystem::path& output_dir, const std::optional<std::filesystem::path>& config) {
            PipelineConfig cfg;
            if (config) apply_config(parse_config_text(read_file(*config)), cfg);
            cfg.data_path = data_path;
            cfg.kos_path = kos_path;
            cfg.output_dir = output_dir;
            run_pipeline(cfg);
        },
        py::arg("data_path"), py::arg("kos_path"), py::arg("output_dir"), py::arg("config") = py::none());
}

// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
//
// authorid - attribute authorship of short (SMS-length) messages by comparing
// stacked unigram frequency profiles against per-author training profiles.
//
// Subcommands: ingest, stats, profile, attribute, experiment. See README.md.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "authorid/attribution.hpp"
#include "authorid/corpus.hpp"
#include "authorid/errors.hpp"
#include "authorid/evaluation.hpp"
#include "authorid/metrics.hpp"
#include "authorid/nus_xml.hpp"
#include "authorid/profile.hpp"

namespace {

using namespace authorid;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    return out;
}

std::string read_all(const std::string& path) {
    auto in = open_input(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Corpus load_corpus(const std::string& path, const std::string& format, const XmlSchema& schema) {
    auto in = open_input(path);
    if (format == "nus-xml") return parse_nus_xml(in, schema);
    return parse_plain(in);
}

// "1,5,10" or "1-20" or a mix of both.
std::vector<std::size_t> parse_stacks(const std::string& spec) {
    std::vector<std::size_t> stacks;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        const auto dash = part.find('-');
        try {
            if (dash == std::string::npos) {
                stacks.push_back(std::stoul(part));
            } else {
                const auto lo = std::stoul(part.substr(0, dash));
                const auto hi = std::stoul(part.substr(dash + 1));
                if (hi < lo) throw ConfigError("bad stack range '" + part + "'");
                for (auto s = lo; s <= hi; ++s) stacks.push_back(s);
            }
        } catch (const std::logic_error&) {
            throw ConfigError("bad stack list '" + spec + "'");
        }
    }
    if (stacks.empty()) throw ConfigError("no stack sizes in '" + spec + "'");
    return stacks;
}

std::optional<std::size_t> parse_count_or_all(const std::string& value, const char* flag) {
    if (value == "all") return std::nullopt;
    try {
        return std::stoul(value);
    } catch (const std::logic_error&) {
        throw ConfigError(std::string(flag) + " must be a positive integer or 'all'");
    }
}

std::string format_score(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct XmlFlags {
    XmlSchema schema;
    void attach(CLI::App* cmd) {
        cmd->add_option("--xml-message-element", schema.message_element,
                        "XML element holding one message")
            ->capture_default_str();
        cmd->add_option("--xml-author-attr", schema.author_attr,
                        "attribute on the message element carrying the author id")
            ->capture_default_str();
        cmd->add_option("--xml-type-attr", schema.type_attr,
                        "message-type attribute; empty disables the type filter")
            ->capture_default_str();
        cmd->add_option("--xml-text-type", schema.text_type_value,
                        "type value identifying a plain text message")
            ->capture_default_str();
        cmd->add_option("--xml-body-path", schema.body_path,
                        "slash-separated element path of the message body, below the message "
                        "element; empty uses the message element's own text")
            ->capture_default_str();
    }
};

void report_stage(const char* stage, const Corpus& corpus) {
    std::cerr << stage << ": " << corpus.size() << " records, " << corpus.author_count()
              << " authors\n";
}

// ---------------------------------------------------------------------------

struct IngestOpts {
    std::string input, format = "plain", output;
    std::size_t min_messages = 50;
    XmlFlags xml;
};

void run_ingest(const IngestOpts& o) {
    const auto parsed = load_corpus(o.input, o.format, o.xml.schema);
    report_stage("parsed", parsed);
    const auto deduped = dedupe(parsed);
    report_stage("dedupe", deduped);
    const auto filtered = filter_min_messages(deduped, o.min_messages);
    report_stage(("min-messages(" + std::to_string(o.min_messages) + ")").c_str(), filtered);
    auto out = open_output(o.output);
    write_plain(filtered, out);
    if (!out) throw Error("write failed for '" + o.output + "'");
    std::cerr << "wrote " << o.output << '\n';
}

struct StatsOpts {
    std::string input, format = "plain";
    XmlFlags xml;
};

void run_stats(const StatsOpts& o) {
    const auto corpus = load_corpus(o.input, o.format, o.xml.schema);
    std::cout << "author,messages,chars_min,chars_median,chars_mean,chars_max\n";
    for (const auto& author : corpus.authors()) {
        std::vector<std::size_t> lengths;
        for (const auto id : corpus.author_records(author)) {
            lengths.push_back(codepoint_count(corpus.record(id).text));
        }
        std::sort(lengths.begin(), lengths.end());
        std::size_t total = 0;
        for (const auto l : lengths) total += l;
        char mean[32];
        std::snprintf(mean, sizeof(mean), "%.1f",
                      static_cast<double>(total) / static_cast<double>(lengths.size()));
        std::cout << author << ',' << lengths.size() << ',' << lengths.front() << ','
                  << lengths[(lengths.size() - 1) / 2] << ',' << mean << ',' << lengths.back()
                  << '\n';
    }
    std::cerr << corpus.size() << " records, " << corpus.author_count() << " authors\n";
}

struct ProfileOpts {
    std::string text_file;
    std::string corpus_path;
    std::string model_out;
};

void run_profile(const ProfileOpts& o) {
    if (!o.text_file.empty()) {
        const auto profile = profile_of(tokenize(read_all(o.text_file)));
        write_profile(profile, std::cout);
        return;
    }
    auto in = open_input(o.corpus_path);
    const auto model = build_model(parse_plain(in));
    auto out = open_output(o.model_out);
    write_model(model, out);
    std::cerr << "wrote model for " << model.size() << " authors to " << o.model_out << '\n';
}

struct AttributeOpts {
    std::string model_path;
    std::string metric = "cosine";
    std::size_t stack = 0;  // 0 = one stack of all query files
    std::vector<std::string> queries;
};

void run_attribute(const AttributeOpts& o) {
    auto model_in = open_input(o.model_path);
    const auto model = read_model(model_in);
    const auto metric = metric_from_string(o.metric);

    std::vector<UnigramProfile> messages;
    messages.reserve(o.queries.size());
    for (const auto& path : o.queries) {
        messages.push_back(profile_of(tokenize(read_all(path))));
    }

    const std::size_t stack = o.stack == 0 ? messages.size() : o.stack;
    if (stack > messages.size()) {
        throw ConfigError("--stack " + std::to_string(stack) + " exceeds the " +
                          std::to_string(messages.size()) + " query files given");
    }
    const std::size_t groups = messages.size() / stack;

    std::cout << "rank,author_id,score\n";
    for (std::size_t g = 0; g < groups; ++g) {
        const std::span<const UnigramProfile> group(messages.data() + g * stack, stack);
        if (groups > 1) {
            std::cout << "# stack " << (g + 1) << ": files " << (g * stack + 1) << "-"
                      << ((g + 1) * stack) << '\n';
        }
        const auto att = attribute(merge(group), model, metric);
        for (std::size_t rank = 0; rank < att.ranking.size(); ++rank) {
            std::cout << (rank + 1) << ',' << att.ranking[rank].first << ','
                      << format_score(att.ranking[rank].second) << '\n';
        }
    }
    const std::size_t dropped = messages.size() % stack;
    if (dropped != 0) {
        std::cerr << "note: " << dropped << " trailing query file(s) did not fill a stack of "
                  << stack << " and were ignored\n";
    }
}

struct ExperimentOpts {
    std::string corpus_path, output;
    std::string preset;
    std::string metric = "cosine";
    std::string stacks = "1";
    std::string train = "all";
    std::string authors = "all";
    std::string selection = "longest";
    std::size_t folds = 10;
    std::uint64_t seed = 0;
};

void run_experiment_cmd(const ExperimentOpts& o) {
    auto in = open_input(o.corpus_path);
    const auto corpus = parse_plain(in);

    std::vector<ExperimentConfig> configs;
    if (!o.preset.empty()) {
        configs = preset_configs(preset_from_string(o.preset), o.seed);
    } else {
        ExperimentConfig c;
        c.metric = metric_from_string(o.metric);
        c.stack_sizes = parse_stacks(o.stacks);
        c.train_per_author = parse_count_or_all(o.train, "--train");
        c.n_authors = parse_count_or_all(o.authors, "--authors");
        c.selection = selection_from_string(o.selection);
        c.folds = o.folds;
        c.seed = o.seed;
        configs.push_back(std::move(c));
    }

    const auto result = run_experiments(configs, corpus);
    for (const auto& cell : result.cells) {
        std::cout << cell.experiment << " metric=" << to_string(cell.metric) << " authors="
                  << (cell.n_authors ? std::to_string(*cell.n_authors) : "all") << " train="
                  << (cell.train_per_author ? std::to_string(*cell.train_per_author) : "all")
                  << " selection=" << to_string(cell.selection) << " stack=" << cell.stack_size
                  << " trials=" << cell.trials() << " correct=" << cell.correct() << " accuracy="
                  << (cell.accuracy() ? format_score(*cell.accuracy()) : "n/a") << '\n';
    }
    auto out = open_output(o.output);
    write_results_csv(result, out);
    if (!out) throw Error("write failed for '" + o.output + "'");
    std::cerr << "wrote " << o.output << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SMS authorship attribution from unigram frequency profiles"};
    app.require_subcommand(1);

    IngestOpts ingest;
    auto* ingest_cmd = app.add_subcommand(
        "ingest", "Parse a corpus, drop duplicates and thin authors, write the plain format");
    ingest_cmd->add_option("--input", ingest.input, "input corpus file")->required();
    ingest_cmd->add_option("--format", ingest.format, "input format")
        ->check(CLI::IsMember({"nus-xml", "plain"}))
        ->capture_default_str();
    ingest_cmd->add_option("--output", ingest.output, "output file (plain format)")->required();
    ingest_cmd
        ->add_option("--min-messages", ingest.min_messages,
                     "drop authors with fewer than this many messages after dedup")
        ->capture_default_str();
    ingest.xml.attach(ingest_cmd);
    ingest_cmd->callback([&] { run_ingest(ingest); });

    StatsOpts stats;
    auto* stats_cmd =
        app.add_subcommand("stats", "Per-author message counts and length distribution (CSV)");
    stats_cmd->add_option("--input", stats.input, "corpus file")->required();
    stats_cmd->add_option("--format", stats.format, "input format")
        ->check(CLI::IsMember({"nus-xml", "plain"}))
        ->capture_default_str();
    stats.xml.attach(stats_cmd);
    stats_cmd->callback([&] { run_stats(stats); });

    ProfileOpts profile;
    auto* profile_cmd = app.add_subcommand(
        "profile", "Print the unigram profile of a text, or build a model file from a corpus");
    auto* text_opt =
        profile_cmd->add_option("--text-file", profile.text_file, "one message; profile to stdout");
    auto* corpus_opt = profile_cmd->add_option("--corpus", profile.corpus_path,
                                               "plain-format corpus to build a model from");
    auto* model_opt =
        profile_cmd->add_option("--model-out", profile.model_out, "model file to write");
    text_opt->excludes(corpus_opt)->excludes(model_opt);
    corpus_opt->needs(model_opt);
    model_opt->needs(corpus_opt);
    profile_cmd->callback([&] {
        if (profile.text_file.empty() && profile.corpus_path.empty()) {
            throw CLI::ValidationError("profile", "need --text-file or --corpus/--model-out");
        }
        run_profile(profile);
    });

    AttributeOpts attribute;
    auto* attribute_cmd =
        app.add_subcommand("attribute", "Rank model authors for one or more query messages");
    attribute_cmd->add_option("--model", attribute.model_path, "model file (from profile --corpus)")
        ->required();
    attribute_cmd->add_option("--metric", attribute.metric, "similarity metric")
        ->check(CLI::IsMember({"cosine", "euclidean"}))
        ->capture_default_str();
    attribute_cmd->add_option("--stack", attribute.stack,
                              "stack size in query files; 0 merges all files into one query");
    attribute_cmd->add_option("queries", attribute.queries, "query message files (one message each)")
        ->required();
    attribute_cmd->callback([&] { run_attribute(attribute); });

    ExperimentOpts experiment;
    auto* experiment_cmd = app.add_subcommand(
        "experiment", "Cross-validated accuracy grid over stack sizes; writes a results CSV");
    experiment_cmd->add_option("--corpus", experiment.corpus_path, "plain-format corpus")
        ->required();
    experiment_cmd->add_option("--output", experiment.output, "results CSV path")->required();
    experiment_cmd
        ->add_option("--seed", experiment.seed,
                     "seed for author choice, random selection and fold shuffling; required so "
                     "every run is reproducible")
        ->required();
    auto* preset_opt = experiment_cmd->add_option("--preset", experiment.preset,
                                                  "standard grid: fig1, fig2, fig3 or fig4");
    auto* metric_opt = experiment_cmd->add_option("--metric", experiment.metric, "similarity metric")
                           ->check(CLI::IsMember({"cosine", "euclidean"}))
                           ->capture_default_str();
    auto* stacks_opt = experiment_cmd
                           ->add_option("--stacks", experiment.stacks,
                                        "stack sizes, e.g. 1,5,10 or 1-20")
                           ->capture_default_str();
    auto* train_opt = experiment_cmd
                          ->add_option("--train", experiment.train,
                                       "messages selected per author before folding, or 'all'")
                          ->capture_default_str();
    auto* authors_opt =
        experiment_cmd
            ->add_option("--authors", experiment.authors, "number of candidate authors, or 'all'")
            ->capture_default_str();
    auto* selection_opt = experiment_cmd
                              ->add_option("--selection", experiment.selection,
                                           "how the per-author pool is selected")
                              ->check(CLI::IsMember({"longest", "random"}))
                              ->capture_default_str();
    auto* folds_opt = experiment_cmd->add_option("--folds", experiment.folds, "cross-validation folds")
                          ->capture_default_str();
    for (auto* opt : {metric_opt, stacks_opt, train_opt, authors_opt, selection_opt, folds_opt}) {
        preset_opt->excludes(opt);
    }
    experiment_cmd->callback([&] { run_experiment_cmd(experiment); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

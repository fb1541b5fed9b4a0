// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "authorid/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "authorid/errors.hpp"
#include "authorid/rng.hpp"
#include "authorid/tokenizer.hpp"

namespace authorid {

std::string_view to_string(SelectionMode s) {
    return s == SelectionMode::longest ? "longest" : "random";
}

SelectionMode selection_from_string(std::string_view name) {
    if (name == "longest") return SelectionMode::longest;
    if (name == "random") return SelectionMode::random;
    throw ConfigError("unknown selection mode '" + std::string(name) +
                      "' (expected longest or random)");
}

std::string_view to_string(Preset p) {
    switch (p) {
        case Preset::fig1: return "fig1";
        case Preset::fig2: return "fig2";
        case Preset::fig3: return "fig3";
        case Preset::fig4: return "fig4";
    }
    return "?";
}

Preset preset_from_string(std::string_view name) {
    if (name == "fig1") return Preset::fig1;
    if (name == "fig2") return Preset::fig2;
    if (name == "fig3") return Preset::fig3;
    if (name == "fig4") return Preset::fig4;
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected fig1..fig4)");
}

std::size_t CellResult::trials() const {
    std::size_t n = 0;
    for (const auto& f : per_fold) n += f.trials;
    return n;
}

std::size_t CellResult::correct() const {
    std::size_t n = 0;
    for (const auto& f : per_fold) n += f.correct;
    return n;
}

std::optional<double> CellResult::accuracy() const {
    const auto n = trials();
    if (n == 0) return std::nullopt;
    return static_cast<double>(correct()) / static_cast<double>(n);
}

const CellResult& ExperimentResult::cell(MetricKind metric, std::size_t stack_size) const {
    const auto it = std::find_if(cells.begin(), cells.end(), [&](const CellResult& c) {
        return c.metric == metric && c.stack_size == stack_size;
    });
    if (it == cells.end()) {
        throw std::out_of_range("no result cell for metric/stack_size " +
                                std::to_string(stack_size));
    }
    return *it;
}

FoldSplit kfold_split(const Corpus& corpus, std::size_t k, std::uint64_t seed) {
    if (k == 0) throw ConfigError("fold count must be positive");
    FoldSplit folds(k);
    for (const auto& author : corpus.authors()) {
        auto ids = corpus.author_records(author);
        if (ids.size() < k) {
            throw InsufficientDataError("author '" + author + "' has " +
                                        std::to_string(ids.size()) + " messages, need at least " +
                                        std::to_string(k) + " (kfold_split)");
        }
        SplitMix64 rng(mix_seed(seed, author));
        fisher_yates_shuffle(ids, rng);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            folds[i % k].by_author[author].push_back(ids[i]);
        }
    }
    return folds;
}

namespace {

// Tokenizing is by far the dominating cost of an experiment, so per-message
// profiles are computed once and reused by every fold, stack size and model.
using ProfileTable = std::unordered_map<std::uint64_t, UnigramProfile>;

ProfileTable build_profile_table(const Corpus& corpus) {
    ProfileTable table;
    table.reserve(corpus.size());
    for (const auto& r : corpus.records()) {
        table.emplace(r.id, profile_of(tokenize(r.text)));
    }
    return table;
}

struct FoldModel {
    std::vector<std::string> authors;  // sorted
    std::vector<UnigramProfile> profiles;
    std::vector<std::uint64_t> norm_sqs;
    std::vector<std::uint64_t> gcds;
};

FoldModel build_fold_model(const FoldSplit& folds, std::size_t test_fold,
                           const ProfileTable& table) {
    std::map<std::string, UnigramProfile> merged;
    for (std::size_t f = 0; f < folds.size(); ++f) {
        if (f == test_fold) continue;
        for (const auto& [author, ids] : folds[f].by_author) {
            auto& profile = merged[author];
            for (const auto id : ids) {
                for (const auto& [token, count] : table.at(id).counts()) {
                    profile.add(token, count);
                }
            }
        }
    }
    FoldModel model;
    model.authors.reserve(merged.size());
    for (auto& [author, profile] : merged) {
        if (profile.empty()) {
            throw EmptyProfileError("author '" + author +
                                    "' has an empty training profile (fold " +
                                    std::to_string(test_fold) + " held out)");
        }
        model.authors.push_back(author);
        model.norm_sqs.push_back(profile.norm_sq());
        model.gcds.push_back(detail::counts_gcd(profile));
        model.profiles.push_back(std::move(profile));
    }
    return model;
}

// Same scoring and tie-breaking as attribute(): authors are visited in
// sorted order and only a strictly better score displaces the incumbent.
std::size_t best_author_index(const FoldModel& model, const UnigramProfile& query,
                              MetricKind metric) {
    const std::uint64_t query_norm_sq = query.norm_sq();
    const std::uint64_t query_gcd = detail::counts_gcd(query);
    const bool descending = higher_is_better(metric);

    std::size_t best = 0;
    double best_score = 0.0;
    for (std::size_t i = 0; i < model.authors.size(); ++i) {
        const std::uint64_t dot = detail::sparse_dot(query, model.profiles[i]);
        const double s =
            metric == MetricKind::cosine
                ? detail::cosine_from_parts(dot, model.norm_sqs[i], model.gcds[i], query_norm_sq,
                                            query_gcd)
                : detail::squared_euclidean_from_parts(dot, model.norm_sqs[i], query_norm_sq);
        if (i == 0 || (descending ? s > best_score : s < best_score)) {
            best = i;
            best_score = s;
        }
    }
    return best;
}

FoldOutcome evaluate_fold(const FoldModel& model, const Fold& test, MetricKind metric,
                          std::size_t stack_size, const ProfileTable& table) {
    FoldOutcome outcome;
    for (const auto& [author, ids] : test.by_author) {
        // Consecutive groups of exactly stack_size in fold (shuffle) order;
        // the final short group is dropped so stack size is constant.
        for (std::size_t start = 0; start + stack_size <= ids.size(); start += stack_size) {
            UnigramProfile query;
            for (std::size_t k = 0; k < stack_size; ++k) {
                for (const auto& [token, count] : table.at(ids[start + k]).counts()) {
                    query.add(token, count);
                }
            }
            if (query.empty()) continue;  // all-whitespace stack carries no evidence
            ++outcome.trials;
            if (model.authors[best_author_index(model, query, metric)] == author) {
                ++outcome.correct;
            }
        }
    }
    return outcome;
}

void validate(const ExperimentConfig& config) {
    if (config.folds < 2) throw ConfigError("folds must be >= 2");
    if (config.stack_sizes.empty()) throw ConfigError("at least one stack size is required");
    for (const auto s : config.stack_sizes) {
        if (s == 0) throw ConfigError("stack sizes must be >= 1");
    }
    if (config.train_per_author) {
        if (*config.train_per_author == 0) throw ConfigError("train_per_author must be >= 1");
        if (*config.train_per_author < config.folds) {
            throw ConfigError("train_per_author (" + std::to_string(*config.train_per_author) +
                              ") must be >= folds (" + std::to_string(config.folds) + ")");
        }
    }
    if (config.n_authors && *config.n_authors == 0) throw ConfigError("n_authors must be >= 1");
}

std::string format_accuracy(std::size_t correct, std::size_t trials) {
    if (trials == 0) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f",
                  static_cast<double>(correct) / static_cast<double>(trials));
    return buf;
}

}  // namespace

FoldOutcome run_fold(const Corpus& corpus, const FoldSplit& folds, std::size_t test_fold,
                     MetricKind metric, std::size_t stack_size) {
    if (test_fold >= folds.size()) throw std::out_of_range("test_fold out of range");
    if (stack_size == 0) throw ConfigError("stack size must be >= 1");

    ProfileTable table;
    for (const auto& fold : folds) {
        for (const auto& [author, ids] : fold.by_author) {
            for (const auto id : ids) {
                table.emplace(id, profile_of(tokenize(corpus.record(id).text)));
            }
        }
    }
    const auto model = build_fold_model(folds, test_fold, table);
    return evaluate_fold(model, folds[test_fold], metric, stack_size, table);
}

ExperimentResult run_experiment(const ExperimentConfig& config, const Corpus& corpus) {
    validate(config);

    // Only authors with enough messages for the configured pool can take
    // part; the candidate set is then narrowed and sampled as configured.
    const std::size_t needed = config.train_per_author.value_or(config.folds);
    Corpus pool = filter_min_messages(corpus, needed);
    if (pool.author_count() == 0) {
        throw InsufficientDataError("no author has the " + std::to_string(needed) +
                                    " messages required (run_experiment pool)");
    }
    if (config.n_authors) {
        pool = select_authors(pool, *config.n_authors, mix_seed(config.seed, "authors"));
    }
    if (config.train_per_author) {
        pool = config.selection == SelectionMode::longest
                   ? select_longest(pool, *config.train_per_author)
                   : select_random(pool, *config.train_per_author, mix_seed(config.seed, "select"));
    }

    const auto folds = kfold_split(pool, config.folds, mix_seed(config.seed, "folds"));
    const auto table = build_profile_table(pool);

    ExperimentResult result;
    result.cells.resize(config.stack_sizes.size());
    for (std::size_t si = 0; si < config.stack_sizes.size(); ++si) {
        auto& cell = result.cells[si];
        cell.experiment = config.label;
        cell.metric = config.metric;
        cell.n_authors = config.n_authors;
        cell.train_per_author = config.train_per_author;
        cell.selection = config.selection;
        cell.stack_size = config.stack_sizes[si];
        cell.per_fold.resize(config.folds);
    }

    // Folds outermost: each fold model is built once and reused for every
    // stack size.
    for (std::size_t f = 0; f < config.folds; ++f) {
        const auto model = build_fold_model(folds, f, table);
        for (std::size_t si = 0; si < config.stack_sizes.size(); ++si) {
            result.cells[si].per_fold[f] =
                evaluate_fold(model, folds[f], config.metric, config.stack_sizes[si], table);
        }
    }
    return result;
}

ExperimentResult run_experiments(std::span<const ExperimentConfig> configs, const Corpus& corpus) {
    ExperimentResult all;
    for (const auto& config : configs) {
        auto result = run_experiment(config, corpus);
        all.cells.insert(all.cells.end(), std::make_move_iterator(result.cells.begin()),
                         std::make_move_iterator(result.cells.end()));
    }
    return all;
}

std::vector<ExperimentConfig> preset_configs(Preset p, std::uint64_t seed) {
    std::vector<std::size_t> stacks_1_20(20);
    std::iota(stacks_1_20.begin(), stacks_1_20.end(), std::size_t{1});

    std::vector<ExperimentConfig> configs;
    switch (p) {
        case Preset::fig1:
            for (const auto metric : {MetricKind::cosine, MetricKind::squared_euclidean}) {
                ExperimentConfig c;
                c.label = "fig1";
                c.metric = metric;
                c.stack_sizes = stacks_1_20;
                c.train_per_author = 500;
                c.n_authors = 20;
                c.selection = SelectionMode::longest;
                c.seed = seed;
                configs.push_back(std::move(c));
            }
            break;
        case Preset::fig2:
        case Preset::fig3:
            for (std::size_t train = 100; train <= 500; train += 100) {
                ExperimentConfig c;
                c.label = std::string(to_string(p));
                c.stack_sizes = stacks_1_20;
                c.train_per_author = train;
                c.n_authors = 20;
                c.selection = p == Preset::fig2 ? SelectionMode::longest : SelectionMode::random;
                c.seed = seed;
                configs.push_back(std::move(c));
            }
            break;
        case Preset::fig4:
            for (std::size_t authors = 5; authors <= 70; authors += 5) {
                ExperimentConfig c;
                c.label = "fig4";
                c.stack_sizes = {1, 2, 3, 5};
                c.train_per_author = 50;
                c.n_authors = authors;
                c.selection = SelectionMode::random;
                c.seed = seed;
                configs.push_back(std::move(c));
            }
            break;
    }
    return configs;
}

void write_results_csv(const ExperimentResult& result, std::ostream& out) {
    out << "experiment,metric,n_authors,train_per_author,selection,stack_size,fold,trials,"
           "correct,accuracy\n";
    for (const auto& cell : result.cells) {
        std::string prefix = cell.experiment;
        prefix += ',';
        prefix += to_string(cell.metric);
        prefix += ',';
        prefix += cell.n_authors ? std::to_string(*cell.n_authors) : "all";
        prefix += ',';
        prefix += cell.train_per_author ? std::to_string(*cell.train_per_author) : "all";
        prefix += ',';
        prefix += to_string(cell.selection);
        prefix += ',';
        prefix += std::to_string(cell.stack_size);

        for (std::size_t f = 0; f < cell.per_fold.size(); ++f) {
            const auto& fold = cell.per_fold[f];
            out << prefix << ',' << f << ',' << fold.trials << ',' << fold.correct << ','
                << format_accuracy(fold.correct, fold.trials) << '\n';
        }
        out << prefix << ",ALL," << cell.trials() << ',' << cell.correct() << ','
            << format_accuracy(cell.correct(), cell.trials()) << '\n';
    }
}

std::string results_csv(const ExperimentResult& result) {
    std::ostringstream out;
    write_results_csv(result, out);
    return out.str();
}

}  // namespace authorid

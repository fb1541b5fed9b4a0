// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "authorid/attribution.hpp"
#include "authorid/corpus.hpp"
#include "authorid/metrics.hpp"

namespace authorid {

enum class SelectionMode { longest, random };

std::string_view to_string(SelectionMode s);
SelectionMode selection_from_string(std::string_view name);

// One experiment grid column: a metric and data-selection setup swept over a
// list of stack sizes under k-fold cross-validation. std::nullopt for
// train_per_author / n_authors means "use everything".
struct ExperimentConfig {
    std::string label = "custom";  // "experiment" column of the results CSV
    MetricKind metric = MetricKind::cosine;
    std::vector<std::size_t> stack_sizes = {1};
    std::optional<std::size_t> train_per_author;  // per-author pool size, selected before folding
    std::optional<std::size_t> n_authors;
    SelectionMode selection = SelectionMode::longest;
    std::size_t folds = 10;
    std::uint64_t seed = 0;
};

struct FoldOutcome {
    std::size_t trials = 0;
    std::size_t correct = 0;
};

// Result for one (config, stack_size) cell, with per-fold counts.
struct CellResult {
    std::string experiment;
    MetricKind metric = MetricKind::cosine;
    std::optional<std::size_t> n_authors;
    std::optional<std::size_t> train_per_author;
    SelectionMode selection = SelectionMode::longest;
    std::size_t stack_size = 1;
    std::vector<FoldOutcome> per_fold;  // length = folds

    std::size_t trials() const;
    std::size_t correct() const;
    // correct/trials; std::nullopt when the cell had zero trials (reported
    // as absent, never as 0).
    std::optional<double> accuracy() const;
};

struct ExperimentResult {
    std::vector<CellResult> cells;

    const CellResult& cell(MetricKind metric, std::size_t stack_size) const;
};

// One cross-validation fold: author -> record ids, in the order they were
// dealt (i.e. the per-author shuffle order), which is also the order test
// messages are grouped into stacks.
struct Fold {
    std::map<std::string, std::vector<std::uint64_t>> by_author;
};
using FoldSplit = std::vector<Fold>;

// Stratified k-fold split: each author's records are shuffled with the
// per-author stream SplitMix64(mix_seed(seed, author)) and dealt round-robin,
// so every fold holds floor(n/k) or ceil(n/k) messages of every author and
// the folds partition the corpus. Throws InsufficientDataError for an author
// with fewer than k records.
FoldSplit kfold_split(const Corpus& corpus, std::size_t k, std::uint64_t seed);

// Trains on every fold except test_fold, then attributes each author's test
// messages in consecutive groups of exactly stack_size (in fold order). A
// final short group is dropped; an author with fewer than stack_size test
// messages simply contributes no trials. Groups whose merged profile is
// empty are skipped the same way.
FoldOutcome run_fold(const Corpus& corpus, const FoldSplit& folds, std::size_t test_fold,
                     MetricKind metric, std::size_t stack_size);

// The full pipeline for one config:
//   1. restrict to authors with enough messages for the configured pool
//      (train_per_author, or folds when training on everything),
//   2. optionally pick n_authors of them at random  [stream mix(seed,"authors")],
//   3. select the per-author pool, longest or random [stream mix(seed,"select")],
//   4. k-fold split                                  [stream mix(seed,"folds")],
//   5. evaluate every (stack_size, fold) cell.
// Deterministic: identical (corpus, config) give byte-identical results.
ExperimentResult run_experiment(const ExperimentConfig& config, const Corpus& corpus);

// Runs several configs and concatenates their cells in order.
ExperimentResult run_experiments(std::span<const ExperimentConfig> configs, const Corpus& corpus);

// The four standard experiment grids. Sweeps:
//   fig1  cosine + euclidean, stacks 1-20, 20 authors, 500 longest
//   fig2  cosine, stacks 1-20, pool sizes 100..500 step 100, longest
//   fig3  fig2 with random selection
//   fig4  cosine, stacks {1,2,3,5}, author counts 5..70 step 5, 50 random
enum class Preset { fig1, fig2, fig3, fig4 };

std::string_view to_string(Preset p);
Preset preset_from_string(std::string_view name);
std::vector<ExperimentConfig> preset_configs(Preset p, std::uint64_t seed);

// Results CSV. Header:
//   experiment,metric,n_authors,train_per_author,selection,stack_size,fold,trials,correct,accuracy
// one row per (cell, fold) plus a summary row per cell with fold=ALL.
// "all" stands for an unset n_authors/train_per_author; the accuracy field
// is empty for zero-trial rows. UTF-8, LF endings, stable column order.
void write_results_csv(const ExperimentResult& result, std::ostream& out);
std::string results_csv(const ExperimentResult& result);

}  // namespace authorid

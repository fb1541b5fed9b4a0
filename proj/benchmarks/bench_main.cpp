// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include <benchmark/benchmark.h>

#include <map>
#include <string>
#include <vector>

#include "authorid/attribution.hpp"
#include "authorid/corpus.hpp"
#include "authorid/evaluation.hpp"
#include "authorid/metrics.hpp"
#include "authorid/profile.hpp"
#include "authorid/rng.hpp"
#include "authorid/tokenizer.hpp"

using namespace authorid;

namespace {

// Skewed counts over a word-id vocabulary, roughly what an author profile of
// a few hundred SMSes looks like.
UnigramProfile synthetic_profile(std::size_t distinct, std::uint64_t seed) {
    SplitMix64 rng(seed);
    UnigramProfile p;
    for (std::size_t i = 0; i < distinct; ++i) {
        p.add("w" + std::to_string(rng.below(distinct * 2)), 1 + rng.below(1 + 400 / (i + 1)));
    }
    return p;
}

std::string synthetic_message(std::size_t words, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::string text;
    for (std::size_t i = 0; i < words; ++i) {
        if (i) text += ' ';
        text += "w" + std::to_string(rng.below(600));
    }
    return text;
}

Corpus synthetic_corpus(std::size_t authors, std::size_t messages) {
    std::vector<SmsRecord> records;
    std::uint64_t id = 0;
    for (std::size_t a = 0; a < authors; ++a) {
        for (std::size_t m = 0; m < messages; ++m) {
            records.push_back({id, "author" + std::to_string(a),
                               synthetic_message(12, id * 2654435761u + a), Source::plain});
            ++id;
        }
    }
    return Corpus(std::move(records));
}

void BM_tokenize(benchmark::State& state) {
    const std::string text = "Hey gr8 news c u l8r @ the usual place?? bring BOTH tickets pls";
    for (auto _ : state) {
        benchmark::DoNotOptimize(tokenize(text));
    }
}
BENCHMARK(BM_tokenize);

void BM_profile_of(benchmark::State& state) {
    const auto tokens = tokenize(synthetic_message(static_cast<std::size_t>(state.range(0)), 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(profile_of(tokens));
    }
}
BENCHMARK(BM_profile_of)->Arg(16)->Arg(256);

void BM_cosine_similarity(benchmark::State& state) {
    const auto author = synthetic_profile(static_cast<std::size_t>(state.range(0)), 1);
    const auto query = synthetic_profile(48, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosine_similarity(author, query));
    }
}
BENCHMARK(BM_cosine_similarity)->Arg(512)->Arg(4096);

void BM_squared_euclidean(benchmark::State& state) {
    const auto author = synthetic_profile(static_cast<std::size_t>(state.range(0)), 1);
    const auto query = synthetic_profile(48, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(squared_euclidean(author, query));
    }
}
BENCHMARK(BM_squared_euclidean)->Arg(512)->Arg(4096);

void BM_attribute(benchmark::State& state) {
    std::map<std::string, UnigramProfile> profiles;
    for (std::int64_t a = 0; a < state.range(0); ++a) {
        profiles["author" + std::to_string(a)] = synthetic_profile(2048, 100 + a);
    }
    const AuthorModel model(std::move(profiles));
    const auto query = synthetic_profile(64, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(attribute(query, model, MetricKind::cosine));
    }
}
BENCHMARK(BM_attribute)->Arg(5)->Arg(20)->Arg(70);

void BM_build_model(benchmark::State& state) {
    const auto corpus = synthetic_corpus(20, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_model(corpus));
    }
}
BENCHMARK(BM_build_model)->Arg(50)->Arg(450)->Unit(benchmark::kMillisecond);

void BM_run_experiment(benchmark::State& state) {
    const auto corpus = synthetic_corpus(10, 100);
    ExperimentConfig config;
    config.stack_sizes = {1, 5, 10};
    config.folds = 10;
    config.seed = 42;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(config, corpus));
    }
}
BENCHMARK(BM_run_experiment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

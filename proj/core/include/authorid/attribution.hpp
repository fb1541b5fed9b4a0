// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "authorid/corpus.hpp"
#include "authorid/metrics.hpp"
#include "authorid/profile.hpp"

namespace authorid {

// Per-author training profiles, immutable after construction. The squared
// norm and count gcd of every profile are cached so cosine scoring of a
// query is O(query size) per author.
class AuthorModel {
public:
    AuthorModel() = default;
    explicit AuthorModel(std::map<std::string, UnigramProfile> profiles);

    bool empty() const { return authors_.empty(); }
    std::size_t size() const { return authors_.size(); }
    const std::vector<std::string>& authors() const { return authors_; }  // bytewise sorted
    const UnigramProfile& profile(const std::string& author) const;

    // Parallel to authors().
    const std::vector<UnigramProfile>& profiles() const { return profiles_; }
    const std::vector<std::uint64_t>& norm_sqs() const { return norm_sqs_; }
    const std::vector<std::uint64_t>& gcds() const { return gcds_; }

private:
    std::vector<std::string> authors_;
    std::vector<UnigramProfile> profiles_;
    std::vector<std::uint64_t> norm_sqs_;
    std::vector<std::uint64_t> gcds_;
};

// Full scoring of one query against a model. `ranking` is sorted best-first
// for the metric's direction; exact score ties are broken by bytewise-smaller
// author id, so attribution is deterministic.
struct Attribution {
    std::vector<std::pair<std::string, double>> ranking;
    const std::string& predicted() const { return ranking.front().first; }
};

// Merged unigram profile per author over the whole corpus. Throws
// EmptyProfileError naming any author whose messages tokenize to nothing.
AuthorModel build_model(const Corpus& training);

// Scores every author and returns the complete ranking. Throws
// EmptyQueryError / EmptyModelError on degenerate inputs.
Attribution attribute(const UnigramProfile& query, const AuthorModel& model, MetricKind metric);

// Model file: `author_id<TAB>token<TAB>count` lines, sorted by author then
// token (bytewise), LF endings.
void write_model(const AuthorModel& model, std::ostream& out);
AuthorModel read_model(std::istream& in);

}  // namespace authorid

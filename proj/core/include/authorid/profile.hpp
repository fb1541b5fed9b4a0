// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "authorid/tokenizer.hpp"

namespace authorid {

// Sparse unigram frequency vector: token -> positive count. Absent tokens
// are implicit zeros. The running total and squared Euclidean norm are kept
// incrementally so metric evaluation never rescans the map.
class UnigramProfile {
public:
    using CountMap = std::unordered_map<std::string, std::uint64_t>;

    UnigramProfile() = default;

    void add(std::string_view token, std::uint64_t n = 1);

    std::uint64_t count(std::string_view token) const;
    const CountMap& counts() const { return counts_; }

    std::uint64_t total() const { return total_; }
    std::uint64_t norm_sq() const { return norm_sq_; }
    std::size_t distinct() const { return counts_.size(); }
    bool empty() const { return total_ == 0; }

    bool operator==(const UnigramProfile& other) const { return counts_ == other.counts_; }

private:
    CountMap counts_;
    std::uint64_t total_ = 0;
    std::uint64_t norm_sq_ = 0;
};

UnigramProfile profile_of(const TokenSeq& tokens);

// Pointwise sum. merge({}) is the empty profile; merging the profiles of k
// messages equals the profile of their concatenated token sequences.
UnigramProfile merge(std::span<const UnigramProfile> profiles);

// Line format `token<TAB>count`, tokens in bytewise order, LF endings.
void write_profile(const UnigramProfile& profile, std::ostream& out);
UnigramProfile read_profile(std::istream& in);

}  // namespace authorid

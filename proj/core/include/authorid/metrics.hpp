// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string_view>

#include "authorid/profile.hpp"

namespace authorid {

enum class MetricKind {
    cosine,             // higher is better
    squared_euclidean,  // lower is better
};

constexpr bool higher_is_better(MetricKind m) { return m == MetricKind::cosine; }

// "cosine" / "euclidean" — the names used by the CLI and the results CSV.
std::string_view to_string(MetricKind m);
MetricKind metric_from_string(std::string_view name);

// Cosine similarity over the union vocabulary: dot(A,B) / (|A| * |B|).
// Counts are integers, so the dot product and both squared norms are exact;
// both vectors are first reduced by the gcd of their counts, which makes the
// result bit-identical under integer scaling of either argument (the scale
// invariance the ranking relies on). Result is clamped to [0, 1].
// Throws UndefinedSimilarityError when either profile is empty.
double cosine_similarity(const UnigramProfile& a, const UnigramProfile& b);

// Sum of squared count differences over the union vocabulary, i.e. the
// squared Euclidean distance. Computed exactly as |A|^2 + |B|^2 - 2*dot(A,B)
// in 64-bit integers. Zero iff the profiles are identical; an empty profile
// is a valid zero vector here. Not scale invariant: a token present on one
// side only contributes its full squared count, which is what penalizes a
// large training profile compared against a short query.
double squared_euclidean(const UnigramProfile& a, const UnigramProfile& b);

// Dispatch on MetricKind.
double score(MetricKind m, const UnigramProfile& a, const UnigramProfile& b);

namespace detail {

// Exact integer building blocks shared with the attribution and evaluation
// modules so scores computed from cached per-author parts are bit-identical
// to cosine_similarity()/squared_euclidean() on the same profiles.
std::uint64_t sparse_dot(const UnigramProfile& a, const UnigramProfile& b);
std::uint64_t counts_gcd(const UnigramProfile& p);  // 0 for an empty profile
double cosine_from_parts(std::uint64_t dot, std::uint64_t a_norm_sq, std::uint64_t a_gcd,
                         std::uint64_t b_norm_sq, std::uint64_t b_gcd);
double squared_euclidean_from_parts(std::uint64_t dot, std::uint64_t a_norm_sq,
                                    std::uint64_t b_norm_sq);

}  // namespace detail

}  // namespace authorid

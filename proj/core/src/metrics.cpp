// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "authorid/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "authorid/errors.hpp"

namespace authorid {

namespace detail {

std::uint64_t sparse_dot(const UnigramProfile& a, const UnigramProfile& b) {
    const auto& small = a.distinct() <= b.distinct() ? a : b;
    const auto& large = a.distinct() <= b.distinct() ? b : a;
    std::uint64_t dot = 0;
    for (const auto& [token, count] : small.counts()) {
        const auto it = large.counts().find(token);
        if (it != large.counts().end()) dot += count * it->second;
    }
    return dot;
}

std::uint64_t counts_gcd(const UnigramProfile& p) {
    std::uint64_t g = 0;
    for (const auto& [token, count] : p.counts()) {
        g = std::gcd(g, count);
        if (g == 1) break;
    }
    return g;
}

double cosine_from_parts(std::uint64_t dot, std::uint64_t a_norm_sq, std::uint64_t a_gcd,
                         std::uint64_t b_norm_sq, std::uint64_t b_gcd) {
    // Divide out the count gcds: every quotient below is an exact integer, so
    // scaling a profile by a constant leaves the operands - and therefore the
    // result - bit-identical. The norm product stays exactly representable
    // for any realistic message corpus, which also makes cos(p, p) == 1.
    const double d = static_cast<double>(dot / (a_gcd * b_gcd));
    const double na = static_cast<double>(a_norm_sq / (a_gcd * a_gcd));
    const double nb = static_cast<double>(b_norm_sq / (b_gcd * b_gcd));
    return std::min(d / std::sqrt(na * nb), 1.0);
}

double squared_euclidean_from_parts(std::uint64_t dot, std::uint64_t a_norm_sq,
                                    std::uint64_t b_norm_sq) {
    return static_cast<double>(a_norm_sq + b_norm_sq - 2 * dot);
}

}  // namespace detail

std::string_view to_string(MetricKind m) {
    return m == MetricKind::cosine ? "cosine" : "euclidean";
}

MetricKind metric_from_string(std::string_view name) {
    if (name == "cosine") return MetricKind::cosine;
    if (name == "euclidean") return MetricKind::squared_euclidean;
    throw ConfigError("unknown metric '" + std::string(name) + "' (expected cosine or euclidean)");
}

double cosine_similarity(const UnigramProfile& a, const UnigramProfile& b) {
    if (a.empty() || b.empty()) {
        throw UndefinedSimilarityError("cosine similarity of an empty profile is undefined");
    }
    return detail::cosine_from_parts(detail::sparse_dot(a, b), a.norm_sq(),
                                     detail::counts_gcd(a), b.norm_sq(), detail::counts_gcd(b));
}

double squared_euclidean(const UnigramProfile& a, const UnigramProfile& b) {
    return detail::squared_euclidean_from_parts(detail::sparse_dot(a, b), a.norm_sq(), b.norm_sq());
}

double score(MetricKind m, const UnigramProfile& a, const UnigramProfile& b) {
    return m == MetricKind::cosine ? cosine_similarity(a, b) : squared_euclidean(a, b);
}

}  // namespace authorid
